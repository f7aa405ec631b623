#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/core/types.h"

namespace stylekit::corpus {

struct SeedDialogue {
  std::string id;  // "seed-0001", 1-based in file order
  DialogueContext context;
};

// Blank-line-separated dialogues, one "A: ..." or "B: ..." turn per line.
// Lines starting with "//" are comments. Dialogues with an even number of
// turns lose their trailing turn so every context awaits a B reply. Throws
// ParseError (line unit) and EmptyCorpus.
std::vector<SeedDialogue> ParseSeedDialogues(std::string_view text);
std::vector<SeedDialogue> IngestSeedDialogues(const std::filesystem::path& path);

}  // namespace stylekit::corpus
