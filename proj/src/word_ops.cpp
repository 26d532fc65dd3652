#include "pica/word_ops.hpp"

#include "pica/error.hpp"
#include "pica/simulation.hpp"

namespace pica {

std::string_view to_string(ConcatKind k) noexcept {
  switch (k) {
    case ConcatKind::Row: return "row";
    case ConcatKind::Col: return "col";
    case ConcatKind::Diag: return "diag";
  }
  return "?";
}

std::optional<ConcatKind> parse_concat_kind(std::string_view s) noexcept {
  if (s == "row") return ConcatKind::Row;
  if (s == "col") return ConcatKind::Col;
  if (s == "diag") return ConcatKind::Diag;
  return std::nullopt;
}

Picture row_concat(const Picture& w, const Picture& v) {
  if (w.cols() != v.cols())
    throw DimensionError("row concatenation needs equal column counts (" +
                         std::to_string(w.cols()) + " vs " + std::to_string(v.cols()) + ")");
  return Picture(w.rows() + v.rows(), w.cols(), w.cells() + v.cells(),
                 w.allows_hash() || v.allows_hash());
}

Picture col_concat(const Picture& w, const Picture& v) {
  if (w.rows() != v.rows())
    throw DimensionError("column concatenation needs equal row counts (" +
                         std::to_string(w.rows()) + " vs " + std::to_string(v.rows()) + ")");
  std::string cells;
  auto wr = w.row_strings(), vr = v.row_strings();
  for (int r = 0; r < w.rows(); ++r) cells += wr[r] + vr[r];
  return Picture(w.rows(), w.cols() + v.cols(), std::move(cells),
                 w.allows_hash() || v.allows_hash());
}

std::vector<Picture> diag_concat_words(const Picture& w, const Picture& v, const Alphabet& alphabet,
                                       std::size_t cap) {
  const int m = w.rows(), n = w.cols(), m2 = v.rows(), n2 = v.cols();
  const int rows = m + m2, cols = n + n2;
  std::vector<Position> free;
  for (int r = 1; r <= m; ++r)
    for (int c = n + 1; c <= cols; ++c) free.push_back({r, c});
  for (int r = m + 1; r <= rows; ++r)
    for (int c = 1; c <= n; ++c) free.push_back({r, c});

  std::size_t count = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (count > cap / alphabet.size()) throw CapacityError("diagonal concatenation result too large");
    count *= alphabet.size();
  }
  if (count > cap) throw CapacityError("diagonal concatenation result too large");

  std::string base(std::size_t(rows) * cols, alphabet[0]);
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c) base[(r - 1) * cols + (c - 1)] = w(r, c);
  for (int r = 1; r <= m2; ++r)
    for (int c = 1; c <= n2; ++c) base[(m + r - 1) * cols + (n + c - 1)] = v(r, c);

  std::vector<Picture> out;
  out.reserve(count);
  std::vector<std::size_t> digits(free.size(), 0);
  bool hash = w.allows_hash() || v.allows_hash();
  for (std::size_t k = 0; k < count; ++k) {
    std::string cells = base;
    for (std::size_t i = 0; i < free.size(); ++i)
      cells[(free[i].row - 1) * cols + (free[i].col - 1)] = alphabet[digits[i]];
    out.emplace_back(rows, cols, std::move(cells), hash);
    for (std::size_t i = free.size(); i-- > 0;) {
      if (++digits[i] < alphabet.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

Picture separated_diag_layout(const Picture& w, const Picture& v, char filler) {
  const int rows = w.rows() + 1 + v.rows(), cols = w.cols() + 1 + v.cols();
  std::string cells(std::size_t(rows) * cols, filler);
  auto put = [&](int r, int c, char s) { cells[(r - 1) * cols + (c - 1)] = s; };
  for (int c = 1; c <= cols; ++c) put(w.rows() + 1, c, kBoundary);
  for (int r = 1; r <= rows; ++r) put(r, w.cols() + 1, kBoundary);
  for (int r = 1; r <= w.rows(); ++r)
    for (int c = 1; c <= w.cols(); ++c) put(r, c, w(r, c));
  for (int r = 1; r <= v.rows(); ++r)
    for (int c = 1; c <= v.cols(); ++c) put(w.rows() + 1 + r, w.cols() + 1 + c, v(r, c));
  return Picture(rows, cols, std::move(cells), true);
}

bool concat_membership(ConcatKind kind, const Automaton2D& a, const Automaton2D& b, PictureView w) {
  const int m = w.rows(), n = w.cols();
  switch (kind) {
    case ConcatKind::Row:
      for (int i = 1; i < m; ++i)
        if (accepts(a, w.block(1, i, 1, n)) && accepts(b, w.block(i + 1, m, 1, n))) return true;
      return false;
    case ConcatKind::Col:
      for (int j = 1; j < n; ++j)
        if (accepts(a, w.block(1, m, 1, j)) && accepts(b, w.block(1, m, j + 1, n))) return true;
      return false;
    case ConcatKind::Diag:
      for (int i = 1; i < m; ++i)
        for (int j = 1; j < n; ++j)
          if (accepts(a, w.block(1, i, 1, j)) && accepts(b, w.block(i + 1, m, j + 1, n)))
            return true;
      return false;
  }
  return false;
}

bool separated_diag_membership(const Automaton2D& a, const Automaton2D& b, PictureView w) {
  const int m = w.rows(), n = w.cols();
  std::vector<int> hash_rows, hash_cols;
  int hash_cells = 0;
  for (int r = 1; r <= m; ++r) {
    bool all = true;
    for (int c = 1; c <= n; ++c) {
      bool h = w.at(r, c) == kBoundary;
      hash_cells += h;
      all = all && h;
    }
    if (all) hash_rows.push_back(r);
  }
  for (int c = 1; c <= n; ++c) {
    bool all = true;
    for (int r = 1; r <= m && all; ++r) all = w.at(r, c) == kBoundary;
    if (all) hash_cols.push_back(c);
  }
  if (hash_rows.size() != 1 || hash_cols.size() != 1) return false;
  const int sr = hash_rows[0], sc = hash_cols[0];
  if (sr == 1 || sr == m || sc == 1 || sc == n) return false;
  if (hash_cells != n + m - 1) return false;
  return accepts(a, w.block(1, sr - 1, 1, sc - 1)) && accepts(b, w.block(sr + 1, m, sc + 1, n));
}

}  // namespace pica
