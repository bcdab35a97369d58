#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitcycle/methods.hpp"

namespace splitcycle {

enum class OutputFormat { Text, Json, Dot };

std::optional<OutputFormat> parse_format(std::string_view token) noexcept;
// Comma-separated method tokens; "all" expands to every method.
std::vector<MethodId> parse_method_list(std::string_view csv);

// Text: per method, "method:", "defeats:" and "winners:" lines, blocks
// separated by a blank line. Json: {"schema":1,"results":[...]}. Dot: the
// margin graph followed by one defeat graph per method.
std::string tabulate(const Profile& p, std::span<const MethodId> methods, OutputFormat format);

} // namespace splitcycle
