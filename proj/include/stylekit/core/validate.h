#pragma once

#include "stylekit/core/errors.h"
#include "stylekit/core/types.h"

namespace stylekit {

// Each overload returns its argument unchanged when every invariant of the
// type holds and throws InvariantViolation naming the field and rule
// otherwise.
const DialogueContext& Validate(const DialogueContext& context);
const StyleProfile& Validate(const StyleProfile& profile);
const StylizedExchange& Validate(const StylizedExchange& exchange);
const TransferPair& Validate(const TransferPair& pair);
const TrainingRecord& Validate(const TrainingRecord& record);
const ChoiceItem& Validate(const ChoiceItem& item);
const ScoreCard& Validate(const ScoreCard& card);
const MetricReport& Validate(const MetricReport& report);

// Lines of a profile description that would collide with the profile block
// layout used by the record formatter.
bool IsReservedProfileLine(std::string_view line);

}  // namespace stylekit
