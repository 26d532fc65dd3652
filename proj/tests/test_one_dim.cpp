#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "pica/constructions.hpp"
#include "pica/error.hpp"
#include "pica/one_dim.hpp"
#include "pica/simulation.hpp"
#include "support.hpp"

using namespace pica;

namespace {

std::vector<Automaton1D> oned_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(corpus::dir() / "oned"))
    if (e.path().extension() == ".aut") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Automaton1D> out;
  for (const auto& f : files) out.push_back(read_automaton_1d_file(f));
  return out;
}

/// Random det two-way machine with `n` states, the last one accepting.
Automaton1D random_two_way(std::mt19937& rng, int n) {
  Automaton1D a("rnd", Kind1D::TwoWay, Alphabet("01"));
  for (int i = 0; i < n; ++i) a.add_state("q" + std::to_string(i));
  a.set_initial(0);
  a.set_accept(n - 1);
  std::uniform_int_distribution<int> to(0, n - 1), coin(0, 3);
  for (StateId q = 0; q + 1 < n; ++q)
    for (char c : {'0', '1', '#'})
      if (coin(rng) != 0) a.set_transition(q, c, to(rng), coin(rng) < 2 ? Direction::L : Direction::R);
  return a;
}

std::vector<std::string> strings_up_to(int len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (static_cast<int>(out[i].size()) < len)
      for (char c : {'0', '1'}) out.push_back(out[i] + c);
  return out;
}

/// M confined to one row holding `r`, entered at `column`: a D move accepts; an
/// undefined move, a move off the row, a repeated configuration or M's accepting
/// state rejects.
bool confined_row(const Automaton2D& m, StateId q, int column, const std::string& r) {
  const int last = static_cast<int>(r.size()) + 1;
  std::set<std::pair<StateId, int>> seen;
  int c = column;
  while (c >= 0 && c <= last && q != m.accept() && seen.insert({q, c}).second) {
    char sym = c == 0 || c == last ? '#' : r[c - 1];
    auto mv = m.moves(q, sym);
    if (mv.empty()) return false;
    if (mv[0].dir == Direction::D) return true;
    q = mv[0].to;
    c += mv[0].dir == Direction::L ? -1 : 1;
  }
  return false;
}

std::vector<Automaton2D> det3w_corpus() {
  auto out = corpus::machines("det3w");
  out.push_back(std::get<Automaton2D>(build_witness("thm9-A")));
  return out;
}

const char* const kTwoWayText = R"(automaton tw
variant 1D-2W
mode det
alphabet 0 1
states s acc
initial s
accept acc
s 0 -> s R
s # -> acc L
)";

}  // namespace

TEST_CASE("1D format round-trips") {
  for (const auto& a : oned_corpus()) {
    CHECK(parse_automaton_1d(format_automaton(a)) == a);
    CHECK(validate(a).empty());
  }
  auto one = two_way_to_one_way(parse_automaton_1d(kTwoWayText));
  CHECK(parse_automaton_1d(format_automaton(one)) == one);
}

TEST_CASE("1D parse errors") {
  CHECK_THROWS_AS(parse_automaton_1d(""), ParseError);
  std::string no_dir = kTwoWayText;
  no_dir.replace(no_dir.find("s R"), 3, "s");
  CHECK_THROWS_AS(parse_automaton_1d(no_dir), ParseError);
  std::string down = kTwoWayText;
  down.replace(down.find("s R"), 3, "s D");
  CHECK_THROWS_AS(parse_automaton_1d(down), ParseError);
  std::string nondet = kTwoWayText;
  nondet.replace(nondet.find("mode det"), 8, "mode nondet");
  CHECK_THROWS_AS(parse_automaton_1d(nondet), ParseError);
  CHECK_THROWS_AS(parse_automaton_1d(R"(automaton o
variant 1D-1W
mode det
alphabet 0
states a
initial a
accept a
a # -> a
)"),
                  ParseError);
}

TEST_CASE("simulate_1d") {
  Automaton1D zeros("zeros", Kind1D::OneWay, Alphabet("01"));
  StateId z = zeros.add_state("z");
  zeros.set_initial(z);
  zeros.add_accepting(z);
  zeros.set_transition(z, '0', z);
  CHECK(simulate_1d(zeros, "000"));
  CHECK_FALSE(simulate_1d(zeros, "010"));
  CHECK(simulate_1d(zeros, ""));
  CHECK_THROWS_AS(simulate_1d(zeros, "2"), InputError);

  std::map<std::string, Automaton1D> by_name;
  for (auto& a : oned_corpus()) by_name.emplace(a.name(), a);
  const auto& bounce = by_name.at("bounce");
  CHECK_FALSE(simulate_1d(bounce, "0110"));
  CHECK_FALSE(simulate_1d(bounce, ""));
  const auto& even = by_name.at("even_length");
  CHECK(simulate_1d(even, ""));
  CHECK(simulate_1d(even, "10"));
  CHECK_FALSE(simulate_1d(even, "101"));
  CHECK(simulate_1d(by_name.at("ends_one"), "001"));
  CHECK_FALSE(simulate_1d(by_name.at("ends_one"), "010"));
  CHECK_FALSE(simulate_1d(by_name.at("ends_one"), ""));
  CHECK(simulate_1d(by_name.at("accept_off_left"), "0"));
  CHECK(simulate_1d(by_name.at("accept_off_left"), "11"));
  CHECK_FALSE(simulate_1d(by_name.at("accept_off_left"), "10"));
  CHECK(simulate_1d(by_name.at("one_first_or_none"), "100"));
  CHECK(simulate_1d(by_name.at("one_first_or_none"), "000"));
  CHECK_FALSE(simulate_1d(by_name.at("one_first_or_none"), "01"));

  Automaton1D at_once("at_once", Kind1D::TwoWay, Alphabet("0"));
  at_once.set_initial(at_once.add_state("q"));
  at_once.set_accept(0);
  CHECK(simulate_1d(at_once, ""));
  CHECK(simulate_1d(at_once, "00"));
}

TEST_CASE("two_way_to_one_way agrees on strings up to length 10") {
  auto words = strings_up_to(10);
  std::vector<Automaton1D> machines = oned_corpus();
  std::mt19937 rng(20260415);
  for (int i = 0; i < 200; ++i) machines.push_back(random_two_way(rng, 2 + i % 2));
  for (const auto& a : machines) {
    auto one = two_way_to_one_way(a);
    REQUIRE_FALSE(one.two_way());
    CHECK(validate(one).empty());
    for (const auto& w : words) {
      INFO(a.name(), " on '", w, "'");
      REQUIRE(simulate_1d(one, w) == simulate_1d(a, w));
    }
  }
}

TEST_CASE("two_way_to_one_way degenerate machines") {
  std::map<std::string, Automaton1D> by_name;
  for (auto& a : oned_corpus()) by_name.emplace(a.name(), a);
  auto empty = two_way_to_one_way(by_name.at("empty"));
  for (const auto& w : strings_up_to(6)) CHECK_FALSE(simulate_1d(empty, w));
  auto zeros = two_way_to_one_way(by_name.at("all_zeros"));
  CHECK(zeros.num_states() == 2);
  CHECK_THROWS_AS(two_way_to_one_way(zeros), PreconditionError);
}

TEST_CASE("uniform_row_sojourn on simple machines") {
  auto sweep = corpus::load("det3w/right_then_down.aut");
  auto s = uniform_row_sojourn(sweep, '0', 7, sweep.initial(), 1);
  REQUIRE(s.departure);
  CHECK(*s.departure == 7);
  CHECK(s.visited_first);
  CHECK(s.visited_last);

  auto down = corpus::load("det3w/straight_down.aut");
  auto d = uniform_row_sojourn(down, '0', 5, down.initial(), 1);
  REQUIRE(d.departure);
  CHECK(*d.departure == 1);
  CHECK_THROWS_AS(uniform_row_sojourn(down, '0', 0, 0, 1), RangeError);
  CHECK_THROWS_AS(uniform_row_sojourn(test::aut(test::kFirstRowZeros), '0', 3, 0, 1),
                  UnsupportedVariant);
}

TEST_CASE("downward_departures replays one sojourn per row") {
  auto sweep = corpus::load("det3w/right_then_down.aut");
  auto w = test::pic({"010", "000", "110"});
  auto deps = downward_departures(sweep, w, 2);
  REQUIRE(deps.size() == 1);
  CHECK(deps[0].column == 3);
  CHECK(deps[0].entry_column == 3);
  CHECK(deps[0].visited_last);
  CHECK_FALSE(deps[0].visited_first);
  CHECK_THROWS_AS(downward_departures(sweep, w, 1), InputError);
  CHECK_THROWS_AS(downward_departures(sweep, w, 4), RangeError);
}

TEST_CASE("downward_departures matches entry-configuration sojourns on random pictures") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bit(0, 1), row(1, 5), width(1, 12);
  for (const auto& m : det3w_corpus()) {
    for (int trial = 0; trial < 300; ++trial) {
      int cols = width(rng), i = row(rng);
      char fill = bit(rng) ? '1' : '0';
      std::vector<std::string> rows(5);
      for (int r = 1; r <= 5; ++r)
        for (int c = 0; c < cols; ++c) rows[r - 1] += r == i ? fill : char('0' + bit(rng));
      Picture w = Picture::from_rows(rows);
      for (const auto& d : downward_departures(m, w, i)) {
        auto s = uniform_row_sojourn(m, fill, cols, d.entry_state, d.entry_column);
        INFO(m.name(), " row ", i, " width ", cols);
        REQUIRE(s.departure);
        CHECK(*s.departure == d.column);
        CHECK(s.visited_first == d.visited_first);
        CHECK(s.visited_last == d.visited_last);
      }
    }
  }
}

TEST_CASE("lemma2_check finds no violations on the corpus") {
  for (const auto& m : det3w_corpus()) {
    for (char fill : {'0', '1'}) {
      auto report = lemma2_check(m, 12, fill);
      INFO(m.name(), " fill ", fill);
      CHECK(report.violations.empty());
      CHECK(report.sojourns > 0);
    }
  }
  CHECK(within_lemma2_bound(1, 100, 0));
  CHECK(within_lemma2_bound(100, 100, 0));
  CHECK_FALSE(within_lemma2_bound(50, 100, 3));
}

TEST_CASE("lemma2_check reports a far departure") {
  // Walks right from column 1 until the border, back left, and descends 6 columns in.
  auto m = test::aut(R"(automaton far
variant 3W
mode det
alphabet 0 1
states r b1 b2 b3 b4 b5 b6 accept
initial r
accept accept
r 0 -> r R
r # -> b1 L
b1 0 -> b2 L
b2 0 -> b3 L
b3 0 -> b4 L
b4 0 -> b5 L
b5 0 -> b6 L
b6 0 -> accept D
)");
  // 8 states: column 7 is within the bound of 9, but not within 5.
  auto report = lemma2_check(m, 12);
  CHECK(report.violations.empty());
  auto s = uniform_row_sojourn(m, '0', 12, m.initial(), 1);
  REQUIRE(s.departure);
  CHECK(*s.departure == 7);
  CHECK_FALSE(within_lemma2_bound(*s.departure, 12, 4));
}

TEST_CASE("row_restriction agrees with the confined-row oracle") {
  auto rows = strings_up_to(12);
  for (const auto& m : det3w_corpus()) {
    const int n = m.num_states();
    for (StateId q = 0; q < n; ++q) {
      for (Side side : {Side::Left, Side::Right}) {
        for (int d = 0; d <= n + 1; ++d) {
          auto N = row_restriction(m, q, side, d);
          CHECK(N.num_states() <= 2 * n + 3);
          CHECK(validate(N).empty());
          for (const auto& r : rows) {
            int column = side == Side::Left ? d : static_cast<int>(r.size()) + 1 - d;
            bool expected = column >= 0 && confined_row(m, q, column, r);
            INFO(m.name(), " entry ", m.state_name(q), " ", to_string(side), " ", d, " row '", r, "'");
            REQUIRE(simulate_1d(N, r) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("row_restriction preconditions") {
  auto down = corpus::load("det3w/straight_down.aut");
  auto N = row_restriction(down, down.initial(), Side::Left, 1);
  for (const auto& r : strings_up_to(5)) CHECK(simulate_1d(N, r));
  CHECK_THROWS_AS(row_restriction(down, 0, Side::Left, 4), PreconditionError);
  CHECK_THROWS_AS(row_restriction(down, 0, Side::Right, -1), PreconditionError);
  CHECK(parse_side("left") == Side::Left);
  CHECK_FALSE(parse_side("up"));
}

TEST_CASE("h(n)") {
  CHECK(kapoutsis_bound(1).h == 1);
  CHECK(kapoutsis_bound(2).h == 6);
  CHECK(kapoutsis_bound(3).h == 57);
  CHECK(kapoutsis_bound(5).h == 10505);
  CHECK(separation_k(1) == 10506);
  CHECK_THROWS_AS(kapoutsis_bound(0), RangeError);
  BigInt prev = 0;
  for (unsigned n = 1; n <= 40; ++n) {
    auto h = kapoutsis_bound(n).h;
    CHECK(h > prev);
    CHECK(h >= n);
    prev = h;
  }
  CHECK(kapoutsis_bound(20).h.str() == "1345352530849080836132887980");
}
