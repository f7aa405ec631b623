#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stylekit/core/types.h"
#include "stylekit/corpus/distribution.h"
#include "stylekit/corpus/seed_reader.h"
#include "stylekit/corpus/synthesizer.h"
#include "stylekit/profile/profile_store.h"

namespace stylekit::corpus {

// One planned (context, style) label. `turn` indexes the A turn the reply
// answers; `reuse` counts how often the style has wrapped around the slot
// list, so (context_id, style) stays unique.
struct WorkItem {
  std::string style;
  std::size_t dialogue = 0;
  std::size_t turn = 0;
  int reuse = 0;
  std::string exchange_id;
  std::string context_id;
};

// Slots are every A turn of every seed dialogue, in file order. Each style
// takes target_count consecutive slots (wrapping) starting where the previous
// style stopped, so styles spread over the seeds and a style mostly covers
// whole dialogues, which lets its replies chain into multi-turn contexts.
// Output is in plan order. Throws EmptyCorpus for an empty seed list.
std::vector<WorkItem> PlanWork(const DistributionPlan& plan,
                               const std::vector<SeedDialogue>& seeds,
                               const std::string& id_prefix);

// Synthesizes every work item. Items sharing (style, dialogue, reuse) form a
// chain processed in turn order: the context of a later turn carries the
// chain's earlier synthesized replies in place of the seed's B turns, unless
// such a reply fails the mechanical QC checks. Chains run concurrently on
// `workers` threads; output follows plan order.
std::vector<StylizedExchange> SynthesizeDialogues(
    Synthesizer& synth, const profile::ProfileStore& profiles,
    const std::vector<SeedDialogue>& seeds, const DistributionPlan& plan,
    const std::string& id_prefix, int workers);

struct TransferPlan {
  std::vector<std::string> styles;  // ordered pairs over these
  int per_pair = 50;
};

// Source sentence k of pair (S1, S2) is sources[S1][k mod size]. Pairs come in
// (i, j) order over `styles`, i != j. Throws PreconditionError when a source
// list is missing or empty.
std::vector<TransferPair> SynthesizeTransfers(
    Synthesizer& synth, const TransferPlan& plan,
    const std::map<std::string, std::vector<std::string>>& sources, int workers);

struct ChoicePlan {
  std::vector<std::string> styles;  // candidate styles, at least 4
  int count = 400;
};

// Correct styles rotate through plan.styles; distractors are three other
// styles drawn per item; contexts rotate through the seeds.
std::vector<ChoiceItem> BuildChoiceSet(Synthesizer& synth,
                                       const profile::ProfileStore& profiles,
                                       const std::vector<SeedDialogue>& seeds,
                                       const ChoicePlan& plan,
                                       std::uint64_t global_seed, int workers);

}  // namespace stylekit::corpus
