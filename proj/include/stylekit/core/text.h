#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stylekit::text {

std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitLines(std::string_view s);
bool StartsWith(std::string_view s, std::string_view prefix);
bool Contains(std::string_view s, std::string_view needle);
std::string ToLowerAscii(std::string_view s);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// Replaces every "{name}" occurrence of each placeholder. Placeholders not in
// `values` are left untouched.
std::string Substitute(
    std::string_view tmpl,
    const std::vector<std::pair<std::string_view, std::string_view>>& values);

}  // namespace stylekit::text
