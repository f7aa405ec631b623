#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/core/types.h"
#include "stylekit/llm/gateway.h"
#include "stylekit/profile/profile_store.h"

namespace stylekit::corpus {

// Trims the reply and strips one matched pair of surrounding double quotes
// ("..." or curly).
std::string CleanResponse(std::string_view reply);

struct SynthesisOptions {
  double temperature = 0.7;
  int max_tokens = 512;
  std::uint64_t seed = 0;
};

// One backend call per label. Every call is seeded from the item id, so an
// item's output does not depend on scheduling.
class Synthesizer {
 public:
  Synthesizer(llm::Gateway& gateway, SynthesisOptions options)
      : gateway_(gateway), options_(options) {}

  // Returns a pending exchange with the profile snapshot attached. Throws
  // InvariantViolation for an invalid context or profile, EmptyReply when
  // nothing is left after cleaning.
  StylizedExchange SynthesizeResponse(const DialogueContext& context,
                                      const StyleProfile& profile,
                                      const std::string& exchange_id,
                                      const std::string& context_id);

  // Throws PreconditionError unless the styles differ and both belong to
  // `transfer_styles`.
  TransferPair SynthesizeTransfer(const std::string& pair_id,
                                  const std::string& source_text,
                                  const std::string& source_style,
                                  const std::string& target_style,
                                  const std::vector<std::string>& transfer_styles);

  // One fresh response per style for the same context, options shuffled by
  // rng_seed. Throws PreconditionError for repeated or unknown styles.
  ChoiceItem BuildChoiceItem(const std::string& item_id,
                             const DialogueContext& context,
                             const std::string& correct_style,
                             const std::vector<std::string>& distractor_styles,
                             std::uint64_t rng_seed,
                             const profile::ProfileStore& profiles);

  const SynthesisOptions& options() const { return options_; }

 private:
  std::string Ask(std::string prompt, std::string_view stage,
                  std::string_view key);

  llm::Gateway& gateway_;
  SynthesisOptions options_;
};

}  // namespace stylekit::corpus
