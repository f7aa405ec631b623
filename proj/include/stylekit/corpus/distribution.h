#pragma once

#include <string>
#include <utility>
#include <vector>

namespace stylekit::corpus {

struct DistributionPlan {
  std::vector<std::pair<std::string, int>> entries;  // (style, target count)
  int total = 0;

  bool operator==(const DistributionPlan&) const = default;
};

// main_count per main style followed by rare_count per rare style. Throws
// PreconditionError when both lists are empty, they overlap, a name repeats
// or a count is not positive.
DistributionPlan PlanDistribution(const std::vector<std::string>& main_styles,
                                  const std::vector<std::string>& rare_styles,
                                  int main_count, int rare_count);

// Arbitrary entries; same checks.
DistributionPlan MakePlan(std::vector<std::pair<std::string, int>> entries);

// Checks total = sum of counts, distinct names, positive counts.
void Validate(const DistributionPlan& plan);

// Styles in plan order.
std::vector<std::string> Styles(const DistributionPlan& plan);

}  // namespace stylekit::corpus
