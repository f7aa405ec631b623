#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stylekit/core/types.h"

namespace stylekit {

// Canonical JSONL: one object per line, keys in lexicographic order, no
// whitespace. Deserialization validates the entity before returning it.

void to_json(nlohmann::json& j, const Turn& t);
void from_json(const nlohmann::json& j, Turn& t);
void to_json(nlohmann::json& j, const DialogueContext& c);
void from_json(const nlohmann::json& j, DialogueContext& c);
void to_json(nlohmann::json& j, const StyleProfile& p);
void from_json(const nlohmann::json& j, StyleProfile& p);
void to_json(nlohmann::json& j, const StylizedExchange& e);
void from_json(const nlohmann::json& j, StylizedExchange& e);
void to_json(nlohmann::json& j, const TransferPair& p);
void from_json(const nlohmann::json& j, TransferPair& p);
void to_json(nlohmann::json& j, const TrainingRecord& r);
void from_json(const nlohmann::json& j, TrainingRecord& r);
void to_json(nlohmann::json& j, const ChoiceItem& c);
void from_json(const nlohmann::json& j, ChoiceItem& c);
void to_json(nlohmann::json& j, const ScoreCard& s);
void from_json(const nlohmann::json& j, ScoreCard& s);
void to_json(nlohmann::json& j, const MetricReport& m);
void from_json(const nlohmann::json& j, MetricReport& m);

template <typename T>
std::string Serialize(const T& entity) {
  nlohmann::json j = entity;
  return j.dump();
}

// Throws ParseError (with byte offset) for malformed JSON, missing or
// mistyped fields, and InvariantViolation for invalid entities.
template <typename T>
T Deserialize(std::string_view line);

template <typename T>
std::string SerializeLines(const std::vector<T>& entities) {
  std::string out;
  for (const auto& e : entities) {
    out += Serialize(e);
    out += '\n';
  }
  return out;
}

// Blank lines are skipped. ParseError offsets are relative to `text`.
template <typename T>
std::vector<T> DeserializeLines(std::string_view text);

}  // namespace stylekit
