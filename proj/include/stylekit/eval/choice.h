#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/core/types.h"
#include "stylekit/llm/gateway.h"

namespace stylekit::eval {

// Option index 0..3 named by the reply, or nullopt when unparseable. The first
// "(X)" wins; failing that, the first whitespace-separated token that is a
// bare letter A-D optionally followed by ')', '.' or ':'.
std::optional<int> ParseChoiceAnswer(std::string_view reply);

struct ChoiceTranscript {
  std::string item_id;
  std::string style_name;
  std::string prompt;
  std::string reply;
  std::optional<int> parsed;
  int answer_index = 0;
  bool correct = false;
};

struct ChoiceResult {
  double accuracy = 0.0;
  int unparseable = 0;
  std::vector<ChoiceTranscript> transcripts;  // item order
};

struct ChoiceOptions {
  bool recite_mode = true;
  double temperature = 0.0;
  int max_tokens = 64;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Throws PreconditionError for no items. Unparseable answers count as wrong.
ChoiceResult RunChoice(const std::vector<ChoiceItem>& items, llm::Gateway& responder,
                       const ChoiceOptions& options);

}  // namespace stylekit::eval
