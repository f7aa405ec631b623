#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/corpus/corpus_builder.h"
#include "stylekit/corpus/distribution.h"

namespace stylekit::orchestrator {

// Everything a run synthesizes. JSON layout:
//
//   {
//     "train": {"main_styles": [...], "main_count": 3532,
//               "rare_styles": [...], "rare_count": 400},
//     "transfer": {"styles": [...], "per_pair": 50},
//     "test": {"entries": [["Humor", 100], ...]},
//     "choice": {"count": 400},
//     "seed_holdout_every": 5
//   }
//
// "test", "choice" and "transfer" are optional. Choice items draw from the
// test styles. Every seed_holdout_every-th seed dialogue (1-based) is kept
// for the test splits; 0 shares all seeds between splits.
struct RunPlan {
  corpus::DistributionPlan train;
  std::optional<corpus::TransferPlan> transfer;
  std::optional<corpus::DistributionPlan> test;
  int choice_count = 0;
  int seed_holdout_every = 0;
};

// Throws ConfigError for malformed plans.
RunPlan ParsePlan(std::string_view json_text);
RunPlan LoadPlan(const std::filesystem::path& path);

// Every style the plan needs a profile for, sorted.
std::vector<std::string> ProfileStyles(const RunPlan& plan);

}  // namespace stylekit::orchestrator
