#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylekit/core/types.h"

namespace stylekit::prompts {

// Fixed instruction texts shared by prompt builders, parsers and the mock
// backend.
inline constexpr std::string_view kReciteTask =
    "Let's think step by step. First, describe the style. Then, generate "
    "example sentences in this style. After that, observe the linguistic "
    "pattern of this style. Finally, output the stylized response.";
inline constexpr std::string_view kChoiceReciteTail =
    "Let's think step by step. First, describe the style. Then, generate "
    "example sentences in this style. After that, observe the linguistic "
    "pattern of this style. Finally, output the best choice without "
    "explanation.";
inline constexpr std::string_view kJudgeNudge = "Output JSON only.";

// "Person A: ...\nPerson B: ..." one line per turn.
std::string RenderContext(const DialogueContext& context);

// Header line that precedes a stylized response in targets and prefixes.
std::string ResponseHeader(std::string_view style);

// Style-profile construction.
std::string DescriptionPrompt(std::string_view style);
std::string ExamplesPrompt(std::string_view style, std::string_view description);
std::string LinguisticPrompt(const std::vector<std::string>& examples);

// Label generation.
std::string DialogueLabelPrompt(const StyleProfile& profile,
                                const DialogueContext& context);
std::string TransferLabelPrompt(std::string_view sentence,
                                std::string_view source_style,
                                std::string_view target_style);

// Evaluation.
std::string JudgePrompt(std::string_view style, const DialogueContext& context,
                        std::string_view response);
std::string ChoicePrompt(std::string_view style, const DialogueContext& context,
                         const std::vector<std::string>& options,
                         bool recite_mode);
// Asks the conversation partner for Person A's next utterance in multi-turn
// evaluation.
std::string PartnerPrompt(const DialogueContext& context);

enum class Family {
  kDescription,
  kExamples,
  kLinguistic,
  kDialogueLabel,
  kTransferLabel,
  kJudge,
  kChoice,
  kPartner,
  kRespond,        // training/inference prompt for a stylized responder
  kTransferTrain,  // training prompt for style transfer
  kUnknown,
};

const char* ToString(Family f);

// Classifies a prompt by its leading header.
Family DetectFamily(std::string_view prompt);

// Style named by a prompt of the given family, if it carries one. For
// transfer prompts this is the target style.
std::optional<std::string> ExtractStyle(Family family, std::string_view prompt);

}  // namespace stylekit::prompts
