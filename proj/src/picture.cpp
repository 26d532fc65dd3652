#include "pica/picture.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pica/error.hpp"

namespace pica {

bool is_symbol(char c) noexcept {
  return c != kBoundary && std::isgraph(static_cast<unsigned char>(c)) != 0;
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw InputError("alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    char c = symbols_[i];
    if (c == kBoundary) throw InputError("'#' is reserved for the boundary marker");
    if (!is_symbol(c)) throw InputError(std::string("invalid symbol '") + c + "'");
    if (symbols_.find(c) != i) throw InputError(std::string("duplicate symbol '") + c + "'");
  }
}

int Alphabet::index_of(char c) const noexcept {
  auto pos = symbols_.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

Picture::Picture(int rows, int cols, char fill, bool allow_hash)
    : Picture(rows, cols, std::string(rows > 0 && cols > 0 ? std::size_t(rows) * cols : 0, fill),
              allow_hash) {}

Picture::Picture(int rows, int cols, std::string cells, bool allow_hash)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), allow_hash_(allow_hash) {
  if (rows < 1 || cols < 1) throw RangeError("picture dimensions must be at least 1x1");
  if (cells_.size() != std::size_t(rows) * std::size_t(cols))
    throw InputError("cell count does not match picture dimensions");
  check_cells();
}

Picture Picture::from_rows(const std::vector<std::string>& rows, bool allow_hash) {
  if (rows.empty()) throw InputError("picture has no rows");
  std::string cells;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError("picture rows differ in length");
    cells += r;
  }
  return Picture(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
                 std::move(cells), allow_hash);
}

void Picture::check_cells() const {
  for (char c : cells_) {
    if (c == kBoundary) {
      if (!allow_hash_) throw InputError("'#' cell in a picture without allow-hash");
    } else if (!is_symbol(c)) {
      throw InputError(std::string("invalid picture symbol '") + c + "'");
    }
  }
}

std::size_t Picture::index(int r, int c) const {
  if (r < 1 || c < 1 || r > rows_ || c > cols_)
    throw RangeError("cell (" + std::to_string(r) + "," + std::to_string(c) + ") out of bounds");
  return std::size_t(r - 1) * cols_ + (c - 1);
}

Picture Picture::with_cell(Position p, char symbol) const {
  std::string cells = cells_;
  cells[index(p.row, p.col)] = symbol;
  return Picture(rows_, cols_, std::move(cells), allow_hash_);
}

std::vector<std::string> Picture::row_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (int r = 0; r < rows_; ++r) out.push_back(cells_.substr(std::size_t(r) * cols_, cols_));
  return out;
}

PictureView Picture::view() const { return PictureView(cells_.data(), rows_, cols_, allow_hash_); }

PictureView::PictureView(const char* cells, int rows, int cols, bool allow_hash)
    : PictureView(cells, cols, rows, cols, allow_hash, 0, 0) {}

PictureView PictureView::block(int r1, int r2, int c1, int c2) const {
  if (r1 < 1 || c1 < 1 || r2 > rows_ || c2 > cols_ || r1 > r2 || c1 > c2)
    throw RangeError("empty or out-of-range window");
  return PictureView(origin_ + (r1 - 1) * stride_ + (c1 - 1), stride_, r2 - r1 + 1, c2 - c1 + 1,
                     allow_hash_, base_row_ + r1 - 1, base_col_ + c1 - 1);
}

Picture PictureView::to_picture() const {
  std::string cells;
  cells.reserve(std::size_t(rows_) * cols_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c) cells.push_back(at(r, c));
  return Picture(rows_, cols_, std::move(cells), allow_hash_);
}

void PictureView::throw_out_of_band(int r, int c) const {
  throw RangeError("position (" + std::to_string(r) + "," + std::to_string(c) +
                   ") outside the extended band");
}

Picture transpose(const Picture& w) {
  std::string cells;
  cells.reserve(w.cells().size());
  for (int r = 1; r <= w.cols(); ++r)
    for (int c = 1; c <= w.rows(); ++c) cells.push_back(w(c, r));
  return Picture(w.cols(), w.rows(), std::move(cells), w.allows_hash());
}

Picture subpicture(const Picture& w, int r1, int r2, int c1, int c2) {
  return w.view().block(r1, r2, c1, c2).to_picture();
}

namespace {

std::vector<std::vector<std::string>> split_blocks(std::string_view text) {
  std::vector<std::vector<std::string>> blocks(1);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == ';') continue;
    if (line.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    blocks.back().push_back(line);
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

}  // namespace

Picture parse_picture(std::string_view text, bool allow_hash) {
  auto blocks = split_blocks(text);
  std::vector<std::string> rows;
  for (auto& b : blocks) rows.insert(rows.end(), b.begin(), b.end());
  return Picture::from_rows(rows, allow_hash);
}

std::vector<Picture> parse_pictures(std::string_view text, bool allow_hash) {
  std::vector<Picture> out;
  for (auto& b : split_blocks(text)) out.push_back(Picture::from_rows(b, allow_hash));
  return out;
}

std::string format_picture(const Picture& w) {
  std::string out;
  for (const auto& r : w.row_strings()) {
    out += r;
    out += '\n';
  }
  return out;
}

std::string format_pictures(const std::vector<Picture>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i > 0) out += '\n';
    out += format_picture(ws[i]);
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

Picture read_picture_file(const std::filesystem::path& path, bool allow_hash) {
  return parse_picture(read_text_file(path), allow_hash);
}

}  // namespace pica
