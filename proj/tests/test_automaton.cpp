#include <algorithm>

#include "doctest.h"
#include "pica/automaton.hpp"
#include "pica/enumeration.hpp"
#include "pica/error.hpp"
#include "pica/simulation.hpp"
#include "support.hpp"

using namespace pica;

namespace {

bool has_kind(const std::vector<Violation>& vs, std::string_view kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("validate flags illegal directions") {
  auto a = test::aut(R"(automaton bad
variant 2W
mode det
alphabet 0
states q acc
initial q
accept acc
q 0 -> q L
)");
  CHECK(has_kind(validate(a), "illegal direction for variant"));
}

TEST_CASE("validate flags fan-out in det mode") {
  auto a = test::aut(R"(automaton bad
variant 2W
mode det
alphabet 0
states q acc
initial q
accept acc
q 0 -> q R
q 0 -> acc D
)");
  CHECK(has_kind(validate(a), "nondeterministic fan-out in det mode"));
  a.set_mode(Mode::Nondeterministic);
  CHECK(validate(a).empty());
}

TEST_CASE("validate flags transitions out of accept") {
  auto a = test::aut(R"(automaton bad
variant 4W
mode nondet
alphabet 0
states q acc
initial q
accept acc
acc 0 -> q U
)");
  CHECK(has_kind(validate(a), "transition from accepting state"));
}

TEST_CASE("missing initial and accept are reported") {
  Automaton2D a("empty", Variant::TwoWay, Mode::Deterministic, Alphabet("0"));
  a.add_state("q");
  auto vs = validate(a);
  CHECK(has_kind(vs, "missing initial state"));
  CHECK(has_kind(vs, "missing accept state"));
}

TEST_CASE("witness machines validate") {
  CHECK(validate(test::aut(test::kFirstRowZeros)).empty());
  CHECK(validate(test::aut(test::kTopLeftOne)).empty());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_automaton("automaton x\nvariant 5W\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton(R"(automaton x
variant 2W
mode det
alphabet 0
states q
initial q
accept q
q 1 -> q R
)"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton(R"(automaton x
variant 2W
mode det
alphabet 0
states q
initial q
accept p
)"),
                  ParseError);
}

TEST_CASE("format and parse round-trip") {
  auto a = test::aut(R"(automaton rt
variant 4W
mode nondet
alphabet a b
states s t acc   ; three states
initial s
accept acc
t # -> acc U
s a -> t L
s a -> s R
s b -> acc D
)");
  auto text = format_automaton(a);
  CHECK(parse_automaton(text) == a);
  CHECK(format_automaton(parse_automaton(text)) == text);
}

TEST_CASE("transpose_automaton is an involution and swaps directions") {
  auto a = test::aut(test::kFirstRowZeros);
  auto t = transpose_automaton(a);
  CHECK(t.moves(t.state("q0"), '0')[0].dir == Direction::D);
  CHECK(transpose_automaton(t) == a);
  auto three = test::aut(R"(automaton x
variant 3W
mode det
alphabet 0
states q
initial q
accept q
)");
  CHECK_THROWS_AS(transpose_automaton(three), UnsupportedVariant);
}

TEST_CASE("transpose of one-row machine accepts exactly one column") {
  auto one_row = test::aut(R"(automaton onerow
variant 2W
mode det
alphabet a
states q d acc
initial q
accept acc
q a -> d D
d # -> acc D
)");
  auto t = transpose_automaton(one_row);
  auto lang = language_up_to(t, {4, 4});
  REQUIRE(lang.size() == 4);
  for (const auto& w : lang) CHECK(w.cols() == 1);
}

TEST_CASE("acceptance commutes with transposition") {
  for (auto text : {test::kFirstRowZeros, test::kTopLeftOne}) {
    auto a = test::aut(text);
    auto t = transpose_automaton(a);
    for_each_picture(a.alphabet(), {3, 3}, kDefaultBudget, [&](const Picture& w) {
      CHECK(accepts(a, w) == accepts(t, transpose(w)));
      return true;
    });
  }
}
