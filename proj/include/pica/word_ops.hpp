#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"

namespace pica {

enum class ConcatKind { Row, Col, Diag };

std::string_view to_string(ConcatKind k) noexcept;
std::optional<ConcatKind> parse_concat_kind(std::string_view s) noexcept;

/// Rows of `w` followed by rows of `v`. Throws DimensionError unless column counts match.
Picture row_concat(const Picture& w, const Picture& v);

/// Columns of `w` followed by columns of `v`. Throws DimensionError unless row counts match.
Picture col_concat(const Picture& w, const Picture& v);

/// Every (m+m') x (n+n') picture with `w` top-left, `v` bottom-right, and any
/// fillers over `alphabet` in the other two blocks.
/// Throws CapacityError if |alphabet|^(m*n' + m'*n) exceeds `cap`.
std::vector<Picture> diag_concat_words(const Picture& w, const Picture& v, const Alphabet& alphabet,
                                       std::size_t cap = 1u << 20);

/// `w` and `v` on the diagonal with one full '#' row and one full '#' column between
/// them; the off-diagonal blocks are filled with `filler`.
Picture separated_diag_layout(const Picture& w, const Picture& v, char filler);

/// Whether `w` lies in L(a) (kind) L(b), by enumerating every split and simulating
/// both factors on the corresponding blocks.
///
///   Row:  some 1 <= i < m with rows 1..i in L(a) and rows i+1..m in L(b).
///   Col:  the same over columns.
///   Diag: some 1 <= i < m, 1 <= j < n with the top-left i x j block in L(a) and the
///         bottom-right (m-i) x (n-j) block in L(b); the other blocks are not read.
bool concat_membership(ConcatKind kind, const Automaton2D& a, const Automaton2D& b, PictureView w);

/// Membership in the separated diagonal concatenation: `w` has exactly one row and
/// exactly one column made entirely of '#', both strictly inside, no other '#'
/// cells, the top-left block in L(a) and the bottom-right block in L(b).
bool separated_diag_membership(const Automaton2D& a, const Automaton2D& b, PictureView w);

}  // namespace pica
