#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stylekit/core/types.h"

namespace stylekit::review {

enum class TicketKind { kSelection, kQc };
enum class TicketStatus { kPending, kResolved };
enum class DecisionAction { kAccept, kReject, kSelect };

struct Decision {
  DecisionAction action = DecisionAction::kAccept;
  std::vector<int> indices;  // kSelect only
};

struct Ticket {
  std::string id;
  TicketKind kind = TicketKind::kQc;
  std::string style_name;
  // Selection: {"candidates": [...]}. QC: {"exchange": <StylizedExchange>}.
  nlohmann::json payload;
  TicketStatus status = TicketStatus::kPending;
  std::optional<Decision> decision;
};

enum class DecisionOutcome { kApplied, kUnknownTicket, kAlreadyResolved, kMalformed };

struct DecisionResult {
  DecisionOutcome outcome = DecisionOutcome::kApplied;
  std::string message;
};

struct KindProgress {
  std::size_t pending = 0;
  std::size_t resolved = 0;
};

struct Progress {
  KindProgress selection;
  KindProgress qc;
};

const char* ToString(TicketKind k);
const char* ToString(TicketStatus s);
const char* ToString(DecisionAction a);
std::optional<TicketKind> TicketKindFromString(const std::string& s);
std::optional<DecisionAction> DecisionActionFromString(const std::string& s);

nlohmann::json TicketToJson(const Ticket& t);
Ticket TicketFromJson(const nlohmann::json& j);

// Human decision queue for example post-selection and dialogue QC.
//
// Every ticket accepts at most one decision: Decide() is linearized under a
// single mutex and a second decision for a resolved ticket is reported as
// kAlreadyResolved without effect. When a decision log path is set, every
// applied decision is appended to it (single writer) and decisions already in
// the log are re-applied to tickets enqueued later.
class TicketStore {
 public:
  explicit TicketStore(std::optional<std::filesystem::path> decision_log = {});

  TicketStore(const TicketStore&) = delete;
  TicketStore& operator=(const TicketStore&) = delete;

  // Ids are derived from content: "selection:<style>" and "qc:<exchange_id>".
  // Enqueuing an existing id returns it unchanged.
  std::string EnqueueSelection(const std::string& style,
                               const std::vector<std::string>& candidates);
  std::string EnqueueQc(const StylizedExchange& exchange);

  DecisionResult Decide(const std::string& ticket_id, DecisionAction action,
                        const nlohmann::json& payload = nlohmann::json::object());

  std::optional<Ticket> Get(const std::string& ticket_id) const;
  // Pending tickets of `kind` in enqueue order.
  std::vector<Ticket> Pending(TicketKind kind, std::size_t offset = 0,
                              std::size_t limit = SIZE_MAX) const;
  Progress progress() const;

  // Blocks until the ticket is resolved. Throws TicketUnknown.
  Ticket WaitResolved(const std::string& ticket_id);

  // Snapshot of all tickets in enqueue order, one JSON object per line.
  std::string DumpTickets() const;
  // Loads tickets written by DumpTickets(), then replays the decision log.
  void LoadTickets(std::string_view jsonl);

 private:
  std::string EnqueueLocked(Ticket ticket);
  DecisionResult DecideLocked(const std::string& ticket_id, const Decision& d,
                              bool log);
  void ReplayLogLocked();

  std::optional<std::filesystem::path> log_path_;
  mutable std::mutex mu_;
  std::condition_variable resolved_cv_;
  std::vector<std::string> order_;
  std::map<std::string, Ticket> tickets_;
  // Decisions read from the log whose ticket has not been enqueued yet.
  std::map<std::string, Decision> logged_;
};

}  // namespace stylekit::review
