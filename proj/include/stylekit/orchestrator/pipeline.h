#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "stylekit/orchestrator/config.h"
#include "stylekit/review/ticket_store.h"

namespace stylekit::orchestrator {

inline constexpr int kManifestSchemaVersion = 1;

// Export file names inside the output directory.
inline constexpr const char* kProfilesFile = "profiles.jsonl";
inline constexpr const char* kExchangesFile = "exchanges.jsonl";  // incl. rejected
inline constexpr const char* kDialoguesFile = "train_dialogues.jsonl";
inline constexpr const char* kTransferFile = "transfer_pairs.jsonl";
inline constexpr const char* kTrainFile = "train.jsonl";
inline constexpr const char* kTestExchangesFile = "test_exchanges.jsonl";  // incl. rejected
inline constexpr const char* kTestGenerationFile = "test_generation.jsonl";
inline constexpr const char* kTestChoiceFile = "test_choice.jsonl";
inline constexpr const char* kTicketsFile = "tickets.jsonl";
inline constexpr const char* kDecisionLogFile = "decisions.jsonl";
inline constexpr const char* kStatsFile = "stats.txt";
inline constexpr const char* kManifestFile = "manifest.json";
// Wall-clock timings live outside the manifest so reruns stay byte-identical.
inline constexpr const char* kTimingsFile = "timings.json";

struct PipelineResult {
  nlohmann::json manifest;
  std::filesystem::path output_dir;
};

// Profile build, synthesis, QC, formatting and export, in that order. Takes
// the output directory's run lock. Validation and plan/seed loading finish
// before any backend call. On failure writes a manifest with
// "complete": false and rethrows. Human review policies serve the review
// service at review.host:review.port while the run waits on decisions.
PipelineResult RunPipeline(const RunConfig& config);

// SHA-256 of each export file that exists, keyed by file name.
std::map<std::string, std::string> ExportDigests(const std::filesystem::path& dir);

}  // namespace stylekit::orchestrator
