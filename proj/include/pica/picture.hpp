#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pica {

/// Boundary marker. Never a member of an alphabet.
inline constexpr char kBoundary = '#';

/// Placeholder for a cell whose value has not been fixed yet (lazy enumeration).
inline constexpr char kUnassigned = '\0';

/// True for characters usable as picture symbols: printable, non-space, not '#'.
bool is_symbol(char c) noexcept;

/// Ordered, duplicate-free set of single-character symbols.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);
  Alphabet(std::initializer_list<char> symbols)
      : Alphabet(std::string_view(std::data(symbols), symbols.size())) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool is_unary() const noexcept { return symbols_.size() == 1; }
  bool contains(char c) const noexcept { return index_of(c) >= 0; }
  int index_of(char c) const noexcept;
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

/// Head position. 1-based; row 0 / rows+1 and column 0 / cols+1 are the boundary frame.
struct Position {
  int row = 1;
  int col = 1;
  auto operator<=>(const Position&) const = default;
};

class PictureView;

/// Rectangular m x n array of symbols, immutable after construction.
///
/// Cells are stored row-major. A picture built with `allow_hash` may contain
/// '#' cells (separated diagonal layouts); these read exactly like the frame.
class Picture {
 public:
  Picture(int rows, int cols, char fill, bool allow_hash = false);
  /// `cells` is row-major, rows * cols characters.
  Picture(int rows, int cols, std::string cells, bool allow_hash = false);

  static Picture from_rows(const std::vector<std::string>& rows, bool allow_hash = false);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool allows_hash() const noexcept { return allow_hash_; }

  /// In-bounds cell (1 <= r <= rows, 1 <= c <= cols).
  char operator()(int r, int c) const { return cells_[index(r, c)]; }
  char operator()(Position p) const { return (*this)(p.row, p.col); }

  /// Copy with one in-bounds cell replaced.
  Picture with_cell(Position p, char symbol) const;

  const std::string& cells() const noexcept { return cells_; }
  std::vector<std::string> row_strings() const;

  PictureView view() const;

  bool operator==(const Picture& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
  }
  std::strong_ordering operator<=>(const Picture& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return cells_.compare(o.cells_) <=> 0;
  }

 private:
  std::size_t index(int r, int c) const;
  void check_cells() const;

  int rows_;
  int cols_;
  std::string cells_;
  bool allow_hash_;
};

/// Thrown by a view over partially assigned cells when an unassigned cell is read.
/// Coordinates are 1-based in the underlying buffer.
struct UnassignedCell {
  Position cell;
};

/// Non-owning window over row-major cells.
///
/// Reads anywhere in the extended band [0, rows+1] x [0, cols+1] of the window;
/// everything outside the window's own cells reads as '#'. Views over buffers
/// containing `kUnassigned` throw `UnassignedCell` when such a cell is read,
/// which is what the decision-tree enumerator relies on.
class PictureView {
 public:
  PictureView(const Picture& p) : PictureView(p.view()) {}  // NOLINT(google-explicit-constructor)
  PictureView(const char* cells, int rows, int cols, bool allow_hash);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool allows_hash() const noexcept { return allow_hash_; }

  char at(int r, int c) const {
    if (r < 0 || c < 0 || r > rows_ + 1 || c > cols_ + 1) throw_out_of_band(r, c);
    if (r == 0 || c == 0 || r == rows_ + 1 || c == cols_ + 1) return kBoundary;
    char s = origin_[(r - 1) * stride_ + (c - 1)];
    if (s == kUnassigned) throw UnassignedCell{{base_row_ + r, base_col_ + c}};
    return s;
  }
  char at(Position p) const { return at(p.row, p.col); }

  /// Sub-window rows r1..r2, columns c1..c2 (1-based, inclusive, non-empty).
  PictureView block(int r1, int r2, int c1, int c2) const;

  /// Materializes the window. Throws UnassignedCell on an unassigned cell.
  Picture to_picture() const;

 private:
  PictureView(const char* origin, int stride, int rows, int cols, bool allow_hash, int base_row,
              int base_col)
      : origin_(origin), stride_(stride), rows_(rows), cols_(cols), allow_hash_(allow_hash),
        base_row_(base_row), base_col_(base_col) {}
  [[noreturn]] void throw_out_of_band(int r, int c) const;

  const char* origin_;
  int stride_;
  int rows_;
  int cols_;
  bool allow_hash_;
  int base_row_;
  int base_col_;
};

/// Symbol at `p`, or '#' on the frame. Throws RangeError outside the extended band.
inline char read_cell(PictureView w, Position p) { return w.at(p); }

/// n x m picture with cell (i, j) = w(j, i).
Picture transpose(const Picture& w);

/// Block rows r1..r2, columns c1..c2. Throws RangeError for empty or out-of-range windows.
Picture subpicture(const Picture& w, int r1, int r2, int c1, int c2);

// Picture file format: one row per line, one character per cell, equal line lengths.
// Lines starting with ';' are comments; blank lines are ignored.
Picture parse_picture(std::string_view text, bool allow_hash = false);
Picture read_picture_file(const std::filesystem::path& path, bool allow_hash = false);
std::string format_picture(const Picture& w);

// Collections: pictures separated by one or more blank lines.
std::vector<Picture> parse_pictures(std::string_view text, bool allow_hash = false);
std::string format_pictures(const std::vector<Picture>& ws);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace pica
