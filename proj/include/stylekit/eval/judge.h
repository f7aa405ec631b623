#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "stylekit/core/types.h"
#include "stylekit/llm/gateway.h"

namespace stylekit::eval {

// Parses the JSON object between the first '{' and the last '}' of the
// reply; relevance, coherence and style must be integers in 1..5. Throws
// MalformedReply.
ScoreCard ParseScoreCard(std::string_view reply);

class StyleJudge {
 public:
  virtual ~StyleJudge() = default;
  virtual ScoreCard Score(const DialogueContext& context, const std::string& response,
                          const std::string& style) = 0;
};

struct GatewayJudgeOptions {
  double temperature = 0.0;
  int max_tokens = 128;
  std::uint64_t seed = 0;
};

// Sends the rubric prompt; on a malformed reply retries once with a JSON-only
// nudge appended, then surfaces MalformedReply.
class GatewayJudge : public StyleJudge {
 public:
  GatewayJudge(llm::Gateway& gateway, GatewayJudgeOptions options = {})
      : gateway_(gateway), options_(options) {}

  ScoreCard Score(const DialogueContext& context, const std::string& response,
                  const std::string& style) override;

 private:
  llm::Gateway& gateway_;
  GatewayJudgeOptions options_;
};

}  // namespace stylekit::eval
