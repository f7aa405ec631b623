#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stylekit/core/types.h"

namespace stylekit::eval {

struct ScoreMeans {
  double relevance = 0.0;
  double coherence = 0.0;
  double style = 0.0;
  int count = 0;
};

struct ScoreSummary {
  std::map<std::string, ScoreMeans> per_style;
  ScoreMeans overall;
};

// (style, scores) pairs. Throws PreconditionError when empty.
ScoreSummary AggregateScores(const std::vector<std::pair<std::string, ScoreCard>>& scored);

// (style, candidate, reference). Per-style and overall reports.
struct MetricSummary {
  std::map<std::string, MetricReport> per_style;
  MetricReport overall;
};
MetricSummary AggregateMetrics(
    const std::vector<std::tuple<std::string, std::string, std::string>>& items);

nlohmann::json ToJson(const ScoreSummary& s);
nlohmann::json ToJson(const MetricSummary& s);

// Result table column sets. BLEU, ROUGE and Distinct are rendered as
// percentages, Length as mean tokens, all with two decimals. Each table
// throws PreconditionError when it has no rows.
inline const std::vector<std::string> kMetricColumns = {
    "Method",  "BLEU-1",  "BLEU-2",     "BLEU-3",     "BLEU-4", "Rouge-1",
    "Rouge-2", "Rouge-L", "Distinct-1", "Distinct-2", "Length"};
inline const std::vector<std::string> kScoreColumns = {"Method", "Relevance",
                                                       "Coherence", "Style"};

std::string RenderMetricTable(
    const std::vector<std::pair<std::string, MetricReport>>& rows);
std::string RenderScoreTable(const std::vector<std::pair<std::string, ScoreMeans>>& rows);
// Columns "Method" then `styles`; each row maps style to average maintained
// rounds. Missing cells render as "-".
std::string RenderMultiTurnTable(
    const std::vector<std::string>& styles,
    const std::vector<std::pair<std::string, std::map<std::string, double>>>& rows);

// Header cells of a rendered table, for shape checks.
std::vector<std::string> TableHeader(const std::string& table);

}  // namespace stylekit::eval
