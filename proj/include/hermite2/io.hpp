#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hermite2/gf2m.hpp"

namespace hermite2 {

/// Malformed element text; `line` is 1-based.
struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

inline Fe parse_element(std::string_view tok, const Field& f, std::size_t lineno) {
  int base = 10;
  std::string_view digits = tok;
  if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
    base = 16;
    digits = tok.substr(2);
  }
  std::uint64_t value = 0;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(lineno, "malformed field element '" + std::string(tok) + "'");
  if (value >= f.order())
    throw ParseError(lineno, "element " + std::string(tok) + " not below field order " +
                                 std::to_string(f.order()));
  return Fe{std::uint32_t(value)};
}

/// Reads whitespace-separated field elements, decimal or 0x-prefixed hex.
/// `#` starts a comment running to the end of the line.
inline std::vector<Fe> read_elements(std::istream& in, const Field& f) {
  std::vector<Fe> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      out.push_back(parse_element(std::string_view(line).substr(pos, end - pos), f, lineno));
      pos = end;
    }
  }
  return out;
}

/// One decimal element per line.
inline void write_elements(std::ostream& os, std::span<const Fe> v) {
  for (const Fe e : v) os << e.bits << '\n';
}

}  // namespace hermite2
