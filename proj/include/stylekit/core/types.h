#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stylekit {

enum class Speaker { kA, kB };

struct Turn {
  Speaker speaker = Speaker::kA;
  std::string text;

  bool operator==(const Turn&) const = default;
};

// Alternating turns A, B, A, ... ending on A's utterance that awaits a
// stylized reply from B.
struct DialogueContext {
  std::vector<Turn> turns;

  bool operator==(const DialogueContext&) const = default;
};

struct LinguisticProfile {
  std::string diction;
  std::string syntax;
  std::string figures_of_speech;
  std::string rhetorical_purpose;

  bool operator==(const LinguisticProfile&) const = default;
};

// Statistical level (description + 4 examples) plus linguistic level.
struct StyleProfile {
  std::string style_name;
  std::string description;
  std::vector<std::string> examples;
  LinguisticProfile linguistic;

  bool operator==(const StyleProfile&) const = default;
};

inline constexpr std::size_t kProfileExampleCount = 4;

enum class QcStatus { kPending, kAccepted, kRejected };

struct StylizedExchange {
  std::string exchange_id;
  std::string context_id;
  DialogueContext context;
  std::string style_name;
  std::string response;  // spoken by B
  std::optional<StyleProfile> profile_snapshot;
  QcStatus qc_status = QcStatus::kPending;

  bool operator==(const StylizedExchange&) const = default;
};

struct TransferPair {
  std::string pair_id;
  std::string source_style;
  std::string target_style;
  std::string source_text;
  std::string transferred_text;

  bool operator==(const TransferPair&) const = default;
};

enum class Task { kDialogue, kTransfer };
enum class RecordFormat { kRecite, kNoRecite, kNoProfile };

struct TrainingRecord {
  std::string record_id;
  Task task = Task::kDialogue;
  // Unset for transfer records.
  std::optional<RecordFormat> format;
  std::string prompt;
  std::string target;
  double loss_weight = 1.0;
  std::string style_name;
  std::optional<std::string> profile_hash;

  bool operator==(const TrainingRecord&) const = default;
};

inline constexpr std::size_t kChoiceOptionCount = 4;

struct ChoiceItem {
  std::string item_id;
  DialogueContext context;
  std::string style_name;
  std::vector<std::string> options;
  // Style that produced each option, parallel to `options`.
  std::vector<std::string> option_styles;
  int answer_index = 0;

  bool operator==(const ChoiceItem&) const = default;
};

struct ScoreCard {
  int relevance = 1;
  int coherence = 1;
  int style = 1;

  bool operator==(const ScoreCard&) const = default;
};

struct MetricReport {
  double bleu_1 = 0;
  double bleu_2 = 0;
  double bleu_3 = 0;
  double bleu_4 = 0;
  double rouge_1 = 0;
  double rouge_2 = 0;
  double rouge_l = 0;
  double distinct_1 = 0;
  double distinct_2 = 0;
  double avg_length = 0;

  bool operator==(const MetricReport&) const = default;
};

const char* ToString(Speaker s);
const char* ToString(QcStatus s);
const char* ToString(Task t);
const char* ToString(RecordFormat f);

Speaker SpeakerFromString(const std::string& s);
QcStatus QcStatusFromString(const std::string& s);
Task TaskFromString(const std::string& s);
RecordFormat RecordFormatFromString(const std::string& s);

}  // namespace stylekit
