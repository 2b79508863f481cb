#include "geovqe/text.hpp"

#include <charconv>
#include <system_error>

#include "geovqe/errors.hpp"

namespace geovqe {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double_token(std::string_view token, std::string_view context) {
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw ValidationError(std::string(context) + ": expected a real number, got '" +
                          std::string(token) + "'");
  return value;
}

long long parse_int_token(std::string_view token, std::string_view context) {
  long long value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw ValidationError(std::string(context) + ": expected an integer, got '" +
                          std::string(token) + "'");
  return value;
}

bool parse_bool_token(std::string_view token, std::string_view context) {
  if (token == "true" || token == "1") return true;
  if (token == "false" || token == "0") return false;
  throw ValidationError(std::string(context) + ": expected true/false, got '" +
                        std::string(token) + "'");
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_char(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace geovqe
