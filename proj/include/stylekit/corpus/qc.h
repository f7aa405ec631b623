#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stylekit/core/types.h"
#include "stylekit/review/ticket_store.h"

namespace stylekit::corpus {

enum class QcPolicy { kHuman, kAuto };

const char* ToString(QcPolicy p);
// Throws ConfigError for anything but "human" or "auto".
QcPolicy QcPolicyFromString(const std::string& s);

// Reason the response fails the mechanical checks, or nullopt when it passes:
// non-empty, no echoed prompt header, at most max_tokens suite tokens.
std::optional<std::string> AutoCheckFailure(std::string_view response,
                                            int max_tokens);

// Sets qc_status on every exchange and returns the accepted ones in input
// order. Rejected exchanges stay in `exchanges`. The human policy enqueues
// one ticket per exchange and blocks until each is resolved; it needs
// `tickets`. Throws PreconditionError for exchanges that are not pending.
std::vector<StylizedExchange> RunQc(std::vector<StylizedExchange>& exchanges,
                                    QcPolicy policy, int max_tokens,
                                    review::TicketStore* tickets = nullptr);

}  // namespace stylekit::corpus
