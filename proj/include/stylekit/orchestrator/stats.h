#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stylekit/core/types.h"

namespace stylekit::orchestrator {

// One column of the dataset statistics table. Tokens use the metric suite's
// tokenizer: response tokens for dialogues, transferred-sentence tokens for
// transfer pairs, mean option tokens for choice items.
struct CorpusStats {
  int instances = 0;
  int styles = 0;
  double avg_tokens = 0.0;
  double avg_turns = 0.0;
  // Fraction of instances carrying a profile; unset where not applicable.
  std::optional<double> avg_profiles;
};

// Each throws PreconditionError for an empty corpus.
CorpusStats DialogueStats(const std::vector<StylizedExchange>& exchanges);
CorpusStats TransferStats(const std::vector<TransferPair>& pairs);
CorpusStats ChoiceStats(const std::vector<ChoiceItem>& items);

nlohmann::json ToJson(const CorpusStats& s);

// Rows "# Instances", "# Styles", "Avg. Tokens", "Avg. Turns", "Avg. Profiles";
// one column per (name, stats).
std::string RenderStatsTable(const std::vector<std::pair<std::string, CorpusStats>>& columns);

}  // namespace stylekit::orchestrator
