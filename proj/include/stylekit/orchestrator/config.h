#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "stylekit/core/types.h"
#include "stylekit/corpus/qc.h"
#include "stylekit/llm/chat.h"

namespace stylekit::orchestrator {

// One run of the pipeline. Loaded from a plain-text file of "key = value"
// lines ('#' starts a comment). Relative paths resolve against the config
// file's directory. See configs/mock.conf for every key.
struct RunConfig {
  llm::BackendConfig synth;
  llm::BackendConfig judge;
  llm::BackendConfig responder;

  std::filesystem::path plan_path;
  std::filesystem::path seeds_path;
  std::filesystem::path output_dir = "out";

  double lambda_sd = 1.0;
  double lambda_st = 1.0;
  std::uint64_t seed = 0;
  corpus::QcPolicy qc_policy = corpus::QcPolicy::kAuto;
  double temperature = 0.7;
  int max_tokens = 512;

  RecordFormat ablation = RecordFormat::kRecite;
  std::string separator = "[SEP]";
  bool include_name_line = true;
  bool with_transfer = true;

  int candidate_count = 8;
  bool auto_select = true;

  std::string review_host = "127.0.0.1";
  int review_port = 8765;

  // Keys and values exactly as written, for the manifest.
  std::map<std::string, std::string> raw;
};

// Throws ConfigError for unknown keys, bad values, or malformed lines.
RunConfig ParseConfig(std::string_view text,
                      const std::filesystem::path& base_dir = {});
RunConfig LoadConfig(const std::filesystem::path& path);

// Checks referenced files exist and values are in range. Throws ConfigError.
void Validate(const RunConfig& config);

nlohmann::json ConfigSnapshot(const RunConfig& config);

}  // namespace stylekit::orchestrator
