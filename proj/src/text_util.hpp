#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pica::detail {

/// Whitespace tokens of one line with the ';' comment stripped.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == ';') break;
    out.push_back(tok);
  }
  return out;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenized_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto toks = tokenize(line);
    if (!toks.empty()) out.push_back({n, std::move(toks)});
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace pica::detail
