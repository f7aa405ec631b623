#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stylekit/core/types.h"
#include "stylekit/eval/judge.h"
#include "stylekit/eval/responder.h"
#include "stylekit/llm/gateway.h"

namespace stylekit::eval {

// Plays Person A between responder turns.
class Partner {
 public:
  virtual ~Partner() = default;
  virtual std::string Next(const DialogueContext& context) = 0;
};

class GatewayPartner : public Partner {
 public:
  GatewayPartner(llm::Gateway& gateway, double temperature = 0.7,
                 int max_tokens = 128, std::uint64_t seed = 0)
      : gateway_(gateway), temperature_(temperature), max_tokens_(max_tokens),
        seed_(seed) {}
  std::string Next(const DialogueContext& context) override;

 private:
  llm::Gateway& gateway_;
  double temperature_;
  int max_tokens_;
  std::uint64_t seed_;
};

struct MultiTurnOptions {
  int max_turns = 10;
  int threshold = 4;  // minimum style score that counts as maintained
  int workers = 1;
};

struct MultiTurnDialogue {
  std::string seed_id;
  DialogueContext transcript;
  std::vector<int> style_scores;  // one per completed responder turn
  int maintained = 0;
  std::optional<std::string> error;  // set when a backend error cut it short
};

struct MultiTurnResult {
  double average_maintained = 0.0;
  std::vector<MultiTurnDialogue> dialogues;  // seed order
};

// Length of the longest prefix of scores at or above threshold.
int MaintainedPrefix(const std::vector<int>& style_scores, int threshold);

// Each seed context (ending on Person A) alternates responder and partner
// turns until max_turns responder turns are judged. A backend error ends only
// its dialogue, keeping the turns judged so far. Throws PreconditionError for
// no seeds or max_turns < 1.
MultiTurnResult RunMultiTurn(const std::vector<std::pair<std::string, DialogueContext>>& seeds,
                             Responder& responder, Partner& partner, StyleJudge& judge,
                             const std::string& style, const MultiTurnOptions& options);

}  // namespace stylekit::eval
