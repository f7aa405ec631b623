#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stylekit::llm {

enum class Role { kSystem, kUser, kAssistant };

struct ChatMessage {
  Role role = Role::kUser;
  std::string content;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  double temperature = 0.7;
  int max_tokens = 512;
  std::optional<std::uint64_t> seed;
};

struct ChatResponse {
  std::string content;
  std::string backend_id;
  std::int64_t latency_ms = 0;
};

enum class BackendKind { kLive, kMock };

struct BackendConfig {
  BackendKind kind = BackendKind::kMock;
  std::optional<std::string> endpoint_url;
  std::string model = "gpt-4";
  std::string api_key_env_var_name = "STYLEKIT_API_KEY";
  int max_concurrent = 4;
  int requests_per_minute = 60;
  int retry_max = 3;
  int retry_base_delay_ms = 500;
  int timeout_ms = 60000;
  // Mock only: per-mille rate of dialogue replies that echo the prompt header,
  // used to exercise QC rejection paths.
  int mock_echo_permille = 0;
};

const char* ToString(Role r);
Role RoleFromString(const std::string& s);

// Throws PreconditionError.
void Validate(const ChatRequest& request);
// Throws ConfigError.
void Validate(const BackendConfig& config);

// Convenience for the common single-user-message request.
ChatRequest UserRequest(std::string content, double temperature, int max_tokens,
                        std::optional<std::uint64_t> seed = std::nullopt);

// First user message, or empty.
const std::string& FirstUserContent(const ChatRequest& request);

}  // namespace stylekit::llm
