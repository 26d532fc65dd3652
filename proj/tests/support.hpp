#pragma once

#include <string_view>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"

namespace test {

inline pica::Automaton2D aut(std::string_view text) { return pica::parse_automaton(text); }

inline pica::Picture pic(std::initializer_list<const char*> rows, bool allow_hash = false) {
  std::vector<std::string> r(rows.begin(), rows.end());
  return pica::Picture::from_rows(r, allow_hash);
}

// First row all '0', scanning right.
inline constexpr std::string_view kFirstRowZeros = R"(automaton frz
variant 2W
mode det
alphabet 0 1
states q0 acc
initial q0
accept acc
q0 0 -> q0 R
q0 # -> acc R
)";

// Cell (1,1) is '1'.
inline constexpr std::string_view kTopLeftOne = R"(automaton tlo
variant 2W
mode det
alphabet 0 1
states q0 acc
initial q0
accept acc
q0 1 -> acc D
)";

inline constexpr std::string_view kUniversal = R"(automaton all
variant 2W
mode det
alphabet 0 1
states q0
initial q0
accept q0
)";

}  // namespace test
