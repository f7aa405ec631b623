#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "stylekit/llm/chat.h"

namespace stylekit::llm {

// A concrete chat-completion transport. Implementations throw
// BackendUnavailable for transport/5xx failures (retryable), BackendRefused
// for 4xx and MalformedReply for unreadable bodies.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual ChatResponse Send(const ChatRequest& request) = 0;
  virtual std::string id() const = 0;
};

// Adapts a callable; used for scripted backends in tests and harness oracles.
class FunctionBackend : public ChatBackend {
 public:
  using Fn = std::function<std::string(const ChatRequest&)>;
  FunctionBackend(std::string id, Fn fn) : id_(std::move(id)), fn_(std::move(fn)) {}
  ChatResponse Send(const ChatRequest& request) override;
  std::string id() const override { return id_; }

 private:
  std::string id_;
  Fn fn_;
};

struct Clock {
  std::function<std::chrono::steady_clock::time_point()> now =
      [] { return std::chrono::steady_clock::now(); };
  std::function<void(std::chrono::milliseconds)> sleep =
      [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
};

// Sliding 60-second window: at most `per_minute` acquisitions in any window.
class RateLimiter {
 public:
  RateLimiter(int per_minute, Clock clock = {});
  void Acquire();

 private:
  const int per_minute_;
  Clock clock_;
  std::mutex mu_;
  std::deque<std::chrono::steady_clock::time_point> issued_;
};

class ConcurrencyLimiter {
 public:
  explicit ConcurrencyLimiter(int max_in_flight) : max_(max_in_flight) {}
  void Acquire();
  void Release();

 private:
  const int max_;
  int in_flight_ = 0;
  std::mutex mu_;
  std::condition_variable cv_;
};

// Uniform completion entry point shared by every module that talks to a
// model. Thread-safe; concurrent Complete() calls are allowed and return in
// no particular order.
class Gateway {
 public:
  Gateway(BackendConfig config, std::shared_ptr<ChatBackend> backend,
          Clock clock = {});

  // Validates the request before touching the backend. Live backends go
  // through the concurrency bound and rate limiter, and transport/5xx
  // failures are retried with exponential backoff up to retry_max times.
  ChatResponse Complete(const ChatRequest& request);

  const BackendConfig& config() const { return config_; }
  std::string backend_id() const { return backend_->id(); }
  std::uint64_t calls() const { return calls_.load(); }

 private:
  ChatResponse CompleteOnce(const ChatRequest& request);

  BackendConfig config_;
  std::shared_ptr<ChatBackend> backend_;
  Clock clock_;
  RateLimiter rate_;
  ConcurrencyLimiter in_flight_;
  std::atomic<std::uint64_t> calls_{0};
};

// Builds the backend named by `config.kind`.
std::shared_ptr<ChatBackend> MakeBackend(const BackendConfig& config,
                                         std::uint64_t mock_seed = 0);

}  // namespace stylekit::llm
