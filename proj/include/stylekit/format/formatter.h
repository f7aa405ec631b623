#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/core/types.h"

namespace stylekit::format {

inline constexpr std::string_view kDefaultSeparator = "[SEP]";

struct FormatOptions {
  // Leading "Name: {Style}" line of the profile block.
  bool include_name_line = true;
  std::string separator = std::string(kDefaultSeparator);
};

// Profile block in recitation order:
//
//   Name: Recipe
//
//   Description: ...
//
//   Examples:
//   1) ...
//   ...
//   4) ...
//
//   Linguistic-level:
//   1) Diction: ...
//   2) Syntax: ...
//   3) Figures of Speech: ...
//   4) Rhetorical Purpose: ...
//
// No trailing newline.
std::string ProfileBlock(const StyleProfile& profile, bool include_name_line);

struct ParsedTarget {
  StyleProfile profile;
  std::string response;
};

// Inverse of the recitation target. The style name comes from the response
// header (and must agree with the name line when present). Throws ParseError.
ParsedTarget ParseReciteTarget(std::string_view target);

// Prompt texts. Contexts render one "Person X: ..." line per turn.
std::string RecitePrompt(const DialogueContext& context, std::string_view style);
std::string NoRecitePrompt(const DialogueContext& context, const StyleProfile& profile,
                           bool include_name_line);
std::string NoProfilePrompt(const DialogueContext& context, std::string_view style);
std::string TransferPrompt(std::string_view sentence, std::string_view source_style,
                           std::string_view target_style);

// Dialogue records. The exchange must be accepted (PreconditionError) and the
// profile must carry its style (StyleMismatch). record_id = exchange_id.
TrainingRecord FormatRecitation(const StylizedExchange& exchange,
                                const StyleProfile& profile, double lambda_sd,
                                const FormatOptions& options = {});
TrainingRecord FormatNoRecite(const StylizedExchange& exchange,
                              const StyleProfile& profile, double lambda_sd,
                              const FormatOptions& options = {});
TrainingRecord FormatNoProfile(const StylizedExchange& exchange,
                               const StyleProfile& profile, double lambda_sd);
// Dispatches on `format`.
TrainingRecord FormatDialogue(const StylizedExchange& exchange,
                              const StyleProfile& profile, RecordFormat format,
                              double lambda_sd, const FormatOptions& options = {});

// record_id = "transfer/" + pair_id.
TrainingRecord FormatTransfer(const TransferPair& pair, double lambda_st);

// Reassigns loss weights by task and shuffles with the seed. Throws
// PreconditionError for a negative or non-finite lambda.
std::vector<TrainingRecord> MixCorpus(std::vector<TrainingRecord> dialogue,
                                      std::vector<TrainingRecord> transfer,
                                      double lambda_sd, double lambda_st,
                                      std::uint64_t shuffle_seed);

// separator + profile block + "\n# Response in {Style} style\n".
std::string TeacherForcePrefix(const StyleProfile& profile,
                               std::string_view separator,
                               bool include_name_line = true);
// Throws ParseError when the prefix does not start with the separator or does
// not parse.
StyleProfile ParseTeacherForcePrefix(std::string_view prefix,
                                     std::string_view separator);

}  // namespace stylekit::format
