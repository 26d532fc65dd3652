#include "doctest.h"
#include "pica/error.hpp"
#include "pica/picture.hpp"
#include "support.hpp"

using namespace pica;
using test::pic;

TEST_CASE("alphabet") {
  Alphabet a("01");
  CHECK(a.size() == 2);
  CHECK(a.index_of('1') == 1);
  CHECK_FALSE(a.is_unary());
  CHECK(Alphabet("a").is_unary());
  CHECK_THROWS_AS(Alphabet(""), InputError);
  CHECK_THROWS_AS(Alphabet("0#"), InputError);
  CHECK_THROWS_AS(Alphabet("00"), InputError);
}

TEST_CASE("read_cell inside and on the frame") {
  Picture w(2, 2, '0');
  CHECK(read_cell(w, {1, 1}) == '0');
  CHECK(read_cell(w, {0, 1}) == '#');
  CHECK(read_cell(w, {3, 3}) == '#');
  CHECK_THROWS_AS(read_cell(w, {4, 1}), RangeError);
  CHECK_THROWS_AS(read_cell(w, {1, -1}), RangeError);
}

TEST_CASE("read_cell on a diagonal layout reads the filler") {
  Picture w = pic({"01", "10"});
  CHECK(read_cell(w, {1, 2}) == '1');
}

TEST_CASE("frame reads are exactly the out-of-bounds band cells") {
  Picture w = pic({"010", "111"});
  for (int r = 0; r <= 3; ++r)
    for (int c = 0; c <= 4; ++c) {
      bool inside = r >= 1 && r <= 2 && c >= 1 && c <= 3;
      CHECK((read_cell(w, {r, c}) == '#') == !inside);
    }
}

TEST_CASE("transpose") {
  Picture row = pic({"011"});
  Picture t = transpose(row);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 1);
  CHECK(t.row_strings() == std::vector<std::string>{"0", "1", "1"});
  Picture w = pic({"010", "110"});
  CHECK(transpose(transpose(w)) == w);
  CHECK(transpose(Picture(2, 2, '0')) == Picture(2, 2, '0'));
}

TEST_CASE("subpicture") {
  Picture w = pic({"100", "010", "001"});
  CHECK(subpicture(w, 1, 3, 1, 3) == w);
  CHECK(subpicture(w, 2, 3, 2, 3) == pic({"10", "01"}));
  CHECK(subpicture(w, 1, 1, 1, 1) == pic({"1"}));
  CHECK_THROWS_AS(subpicture(w, 2, 1, 1, 1), RangeError);
  CHECK_THROWS_AS(subpicture(w, 1, 4, 1, 1), RangeError);
}

TEST_CASE("hash cells need allow_hash") {
  CHECK_THROWS_AS(pic({"0#"}), InputError);
  Picture w = pic({"0#"}, true);
  CHECK(w(1, 2) == '#');
  CHECK(read_cell(w, {1, 2}) == '#');
}

TEST_CASE("views and blocks") {
  Picture w = pic({"012", "345", "678"});
  PictureView b = w.view().block(2, 3, 2, 3);
  CHECK(b.rows() == 2);
  CHECK(b.at(1, 1) == '4');
  CHECK(b.at(2, 2) == '8');
  CHECK(b.at(0, 1) == '#');
  CHECK(b.at(3, 3) == '#');
  CHECK(b.block(2, 2, 1, 2).to_picture() == pic({"78"}));
}

TEST_CASE("unassigned cells throw their buffer position") {
  std::string cells = {'0', kUnassigned, '0', '0'};
  PictureView v(cells.data(), 2, 2, false);
  CHECK(v.at(1, 1) == '0');
  try {
    (void)v.block(1, 2, 2, 2).at(1, 1);
    FAIL("expected UnassignedCell");
  } catch (const UnassignedCell& u) {
    CHECK(u.cell == Position{1, 2});
  }
}

TEST_CASE("picture text format") {
  Picture w = parse_picture("; comment\n01\n\n10\n");
  CHECK(w == pic({"01", "10"}));
  CHECK(format_picture(w) == "01\n10\n");
  CHECK_THROWS_AS(parse_picture("01\n1\n"), InputError);
  auto ws = parse_pictures("0\n\n1\n1\n");
  REQUIRE(ws.size() == 2);
  CHECK(ws[1] == pic({"1", "1"}));
  CHECK(parse_pictures(format_pictures(ws)) == ws);
}
