#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/core/types.h"
#include "stylekit/llm/gateway.h"
#include "stylekit/profile/profile_store.h"
#include "stylekit/review/ticket_store.h"

namespace stylekit::profile {

// Removes one leading list marker ("3)", "3.", "-", "*") and surrounding
// whitespace.
std::string StripListMarker(std::string_view line);

// Newline-separated plain sentences, list markers stripped, blank lines
// skipped. Throws ParseError for markdown headers or an empty list.
std::vector<std::string> ParseSentenceList(std::string_view reply);

// Parses the four tagged observation lines, accepting ⟨Tag⟩ or <Tag> in any
// order. Throws ParseError naming every missing or duplicated tag, so the
// result is always complete.
LinguisticProfile ParseObservations(std::string_view reply);

struct ProfileBuilderOptions {
  // Candidates generated before post-selection.
  int candidate_count = 8;
  // Bound on example-generation calls; 0 derives one from candidate_count.
  int max_example_calls = 0;
  // Take the first 4 candidates instead of waiting for a human selection.
  bool auto_select = true;
  double temperature = 0.7;
  int max_tokens = 512;
  std::uint64_t seed = 0;
};

class ProfileBuilder {
 public:
  ProfileBuilder(llm::Gateway& gateway, ProfileBuilderOptions options,
                 std::shared_ptr<review::TicketStore> tickets = nullptr);

  std::string BuildDescription(const std::string& style);

  // Calls the backend (4 sentences per call) until `count` distinct
  // candidates accumulate. Throws PreconditionError for count < 4 and
  // InsufficientCandidates when the call budget runs out.
  std::vector<std::string> GenerateCandidateExamples(const std::string& style,
                                                     const std::string& description,
                                                     int count);

  std::string EnqueueSelection(const std::string& style,
                               const std::vector<std::string>& candidates);
  // Resolves the ticket with the chosen indices and returns those candidates
  // in chosen order. Throws TicketUnknown or WrongSelectionCount.
  std::vector<std::string> ApplySelection(const std::string& ticket_id,
                                          const std::vector<int>& chosen);
  // Auto mode returns the first 4 candidates; otherwise enqueues a ticket and
  // blocks until a reviewer resolves it.
  std::vector<std::string> SelectExamples(const std::string& style,
                                          const std::vector<std::string>& candidates);

  LinguisticProfile ExtractLinguistic(const std::vector<std::string>& examples);

  // Validates and persists the profile. Throws InvariantViolation or
  // DuplicateStyle.
  StyleProfile AssembleProfile(const std::string& style,
                               const std::string& description,
                               const std::vector<std::string>& examples,
                               const LinguisticProfile& linguistic,
                               ProfileStore& store);

  // All stages in order.
  StyleProfile Build(const std::string& style, ProfileStore& store);

  review::TicketStore& tickets() { return *tickets_; }

 private:
  std::string Ask(std::string prompt, std::string_view stage,
                  std::string_view key);

  llm::Gateway& gateway_;
  ProfileBuilderOptions options_;
  std::shared_ptr<review::TicketStore> tickets_;
};

}  // namespace stylekit::profile
