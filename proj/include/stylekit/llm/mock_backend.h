#pragma once

#include <cstdint>
#include <string>

#include "stylekit/llm/gateway.h"

namespace stylekit::llm {

// Deterministic reply for a request: a pure function of the prompt family,
// the style named in the prompt and the seed. Every family's reply parses
// with the matching downstream parser; unknown families are echoed.
std::string MockReply(const ChatRequest& request, std::uint64_t seed,
                      int echo_permille = 0);

class MockBackend : public ChatBackend {
 public:
  explicit MockBackend(std::uint64_t default_seed = 0, int echo_permille = 0)
      : default_seed_(default_seed), echo_permille_(echo_permille) {}

  // Uses request.seed when present, otherwise the backend's default seed.
  ChatResponse Send(const ChatRequest& request) override;
  std::string id() const override { return "mock"; }

 private:
  std::uint64_t default_seed_;
  int echo_permille_;
};

}  // namespace stylekit::llm
