#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <variant>
#include <vector>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"

namespace pica {

/// How the two simulated computations of a unary row concatenation end.
/// The first letter is where A leaves its word, the second where B does
/// (B = bottom border, R = right border). BBB and BBA both leave at the bottom;
/// in BBB, B's guessed exit comes first, in BBA, A's does.
enum class CaseTag { BottomRight, RightBottom, BottomBottomBefore, BottomBottomAfter, RightRight };

inline constexpr CaseTag kAllCaseTags[] = {CaseTag::BottomRight, CaseTag::RightBottom,
                                           CaseTag::BottomBottomBefore, CaseTag::BottomBottomAfter,
                                           CaseTag::RightRight};

/// "BR", "RB", "BBB", "BBA", "RR". These are also the state-name prefixes in
/// unary_row_concat output.
std::string_view to_string(CaseTag t) noexcept;
std::optional<CaseTag> parse_case_tag(std::string_view s) noexcept;

/// Case of a unary_row_concat state, read from its name; nullopt for the shared
/// start and accept states.
std::optional<CaseTag> case_of_state(std::string_view state_name) noexcept;

/// States from which accept is reachable through '#'-transitions alone (accept included).
/// Throws UnsupportedVariant unless 2W.
std::set<StateId> boundary_reach_set(const Automaton2D& a);

/// Equivalent 2W automaton that decides at its first '#' read: every '#' entry
/// becomes a single move to accept (state in boundary_reach_set) or is removed.
/// Throws UnsupportedVariant unless 2W.
Automaton2D to_ibr(const Automaton2D& a);

/// True iff every '#' entry outside accept is a single move into accept.
bool is_ibr(const Automaton2D& a);

/// Nondeterministic 2W automaton for L(a) row-concatenated with L(b), both 2W over
/// the same unary alphabet. Throws AlphabetError or UnsupportedVariant.
Automaton2D unary_row_concat(const Automaton2D& a, const Automaton2D& b);

/// Column version, through transposition.
Automaton2D unary_col_concat(const Automaton2D& a, const Automaton2D& b);

/// 2W automaton for separated diagonal layouts: a '#' row and a '#' column split
/// the picture, L(a) top-left, L(b) bottom-right. Deterministic when both inputs are.
Automaton2D diag_concat_separated(const Automaton2D& a, const Automaton2D& b);

/// Nondeterministic 2W automaton for the diagonal concatenation of L(a) and L(b).
Automaton2D diag_concat_nondet_2w(const Automaton2D& a, const Automaton2D& b);

/// 4 x 2k pictures: rows 1 and 3 all '0', row 2 = 0^k 1 0^(k-1), row 4 arbitrary.
/// Throws RangeError for k < 1.
std::vector<Picture> thm9_family(int k);

using Witness = std::variant<Automaton2D, std::vector<Picture>>;

/// first-row-zeros, top-left-one, thm9-A, thm9-B or thm9-X(k). Throws LookupError.
Witness build_witness(std::string_view name);

}  // namespace pica
