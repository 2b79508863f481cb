#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace geovqe {

/// Shortest decimal form that round-trips the exact double (std::to_chars);
/// infinities render as "inf"/"-inf".
std::string format_double(double v);

/// Strict full-token numeric parses; `context` prefixes the ValidationError
/// message (typically "path:line").
double parse_double_token(std::string_view token, std::string_view context);
long long parse_int_token(std::string_view token, std::string_view context);
bool parse_bool_token(std::string_view token, std::string_view context);

/// Whitespace-separated tokens (space/tab); no empty tokens.
std::vector<std::string_view> split_ws(std::string_view line);

/// Split on a single delimiter, keeping empty fields.
std::vector<std::string_view> split_char(std::string_view line, char delim);

}  // namespace geovqe
