#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "pica/constructions.hpp"
#include "pica/enumeration.hpp"
#include "pica/one_dim.hpp"
#include "pica/simulation.hpp"

using namespace pica;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(PICA_DATA_DIR) / name).string(); }
std::string in_corpus(const std::string& rel) { return (corpus::dir() / rel).string(); }

fs::path scratch() {
  auto d = fs::temp_directory_path() / "pica_cli_test";
  fs::create_directories(d);
  return d;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("bound") {
  auto r = call({"bound", "3"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "h(3) = 57\n"));
  CHECK(contains(call({"bound", "1"}).out, "k(1) = h(5) + 1 = 10506\n"));
  CHECK(call({"bound", "0"}).status == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"run", data("first_row_zeros.aut")}).status == 2);
  CHECK(call({"run", "missing.aut", data("zeros_2x2.pic")}).status == 2);
  CHECK(call({"equiv", data("first_row_zeros.aut")}).status == 2);
  CHECK(call({"construct", "mystery", data("one_row.aut"), "-o", "x"}).status == 2);
  auto help = call({"--help"});
  CHECK(help.status == 0);
  CHECK(contains(help.out, "lemma2-check"));
}

TEST_CASE("run with trace") {
  auto r = call({"run", data("first_row_zeros.aut"), data("zeros_2x2.pic"), "--trace"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "q0 @ (1,1) reads '0'\n"));
  CHECK(contains(r.out, "accept @ ESC reads '#'\n"));
  CHECK(r.out.ends_with("verdict: accept\n"));

  auto rej = call({"run", data("first_row_zeros.aut"), data("row_sample.pic")});
  CHECK(rej.status == 1);
  CHECK(rej.out.ends_with("verdict: reject\n"));
}

TEST_CASE("run agrees with the library on the corpus") {
  auto pic = data("corner_one.pic");
  auto w = read_picture_file(pic);
  for (const char* name : {"first_row_zeros", "top_left_one", "col1_ones", "some_path_one", "mixed6"}) {
    auto path = in_corpus(std::string("2w/") + name + ".aut");
    bool direct = accepts(read_automaton_file(path), w);
    CHECK(call({"run", path, pic}).status == (direct ? 0 : 1));
  }
}

TEST_CASE("validate") {
  auto r = call({"validate", data("zigzag.aut")});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "violations: 0\n"));
  auto one = call({"validate", data("ends_one_1d.aut")});
  CHECK(one.status == 0);
  CHECK(contains(one.out, "variant: 1D-2W\n"));

  auto bad = scratch() / "bad.aut";
  write_text_file(bad, "automaton bad\nvariant 2W\nmode det\nalphabet 0\nstates q\ninitial q\naccept q\nq 0 -> q U\n");
  auto v = call({"validate", bad.string()});
  CHECK(v.status == 1);
  CHECK(contains(v.out, "violation: "));
}

TEST_CASE("enum and concat") {
  auto r = call({"enum", data("first_row_zeros.aut"), "--max-rows", "2", "--max-cols", "2"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "accepted: 8\n"));

  auto row = call({"concat", "row", data("zeros_2x2.pic"), data("zeros_2x2.pic")});
  CHECK(row.status == 0);
  CHECK(contains(row.out, "count: 1\n\n00\n00\n00\n00\n"));
  auto diag = call({"concat", "diag", data("zeros_2x2.pic"), data("zeros_2x2.pic")});
  CHECK(contains(diag.out, "count: 256\n"));
  CHECK(call({"concat", "diag", data("zeros_2x2.pic"), data("zeros_2x2.pic"), "--cap", "10"}).status == 2);
  CHECK(call({"concat", "row", data("zeros_2x2.pic"), data("row_sample.pic")}).status == 2);
}

TEST_CASE("construct and equiv") {
  auto out = (scratch() / "row.aut").string();
  auto c = call({"construct", "unary-row", data("one_row.aut"), data("everything.aut"), "-o", out});
  REQUIRE(c.status == 0);
  CHECK(read_automaton_file(out) ==
        unary_row_concat(read_automaton_file(data("one_row.aut")), read_automaton_file(data("everything.aut"))));
  auto e = call({"equiv", out, "--against-concat", "row", data("one_row.aut"), data("everything.aut"),
                 "--max-rows", "6", "--max-cols", "6"});
  CHECK(e.status == 0);
  CHECK(contains(e.out, "verdict: Ok\n"));
  auto lazy = call({"equiv", out, "--against-concat", "row", data("one_row.aut"),
                    data("everything.aut"), "--max-rows", "6", "--max-cols", "6", "--lazy"});
  CHECK(lazy.status == 0);

  auto ibr = (scratch() / "ibr.aut").string();
  REQUIRE(call({"construct", "ibr", data("first_row_zeros.aut"), "-o", ibr}).status == 0);
  CHECK(call({"equiv", ibr, "--against-aut", data("first_row_zeros.aut")}).status == 0);

  auto diag = (scratch() / "diag.aut").string();
  auto tlo = data("top_left_one.aut");
  REQUIRE(call({"construct", "diag", tlo, tlo, "-o", diag}).status == 0);
  CHECK(call({"equiv", diag, "--against-concat", "diag", tlo, tlo}).status == 0);

  auto sep = (scratch() / "sep.aut").string();
  REQUIRE(call({"construct", "diag-sep", tlo, tlo, "-o", sep}).status == 0);
  auto s = call({"equiv", sep, "--against-concat", "diag-sep", tlo, tlo, "--max-rows", "4", "--max-cols", "4"});
  CHECK(s.status == 0);
  CHECK(contains(s.out, "layouts: "));

  auto w = (scratch() / "x2.pic").string();
  REQUIRE(call({"construct", "witness", "thm9-X(2)", "-o", w}).status == 0);
  CHECK(parse_pictures(read_text_file(w)).size() == 16);
  CHECK(call({"construct", "witness", "nobody", "-o", w}).status == 2);
}

TEST_CASE("equiv and refute report counterexamples") {
  auto frz = data("first_row_zeros.aut");
  auto e = call({"equiv", frz, "--against-concat", "row", frz, frz});
  CHECK(e.status == 1);
  CHECK(contains(e.out, "verdict: Counterexample\n"));
  CHECK(contains(e.out, "picture:\n0\n"));
  CHECK(contains(e.out, "trace:\n"));

  auto r = call({"refute", frz, "--target-concat", "row", frz, frz});
  CHECK(r.status == 1);
  auto direct = refute(read_automaton_file(frz), ConcatKind::Row, read_automaton_file(frz),
                       read_automaton_file(frz), {3, 3});
  REQUIRE(direct);
  CHECK(contains(r.out, "picture:\n" + format_picture(direct->word)));
  CHECK(call({"refute", frz, "--target-concat", "diag-sep", frz, frz}).status == 2);
}

TEST_CASE("reports are deterministic") {
  auto frz = data("first_row_zeros.aut");
  std::vector<std::string> args{"refute", frz, "--target-concat", "row", frz, frz};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("one-dimensional commands") {
  auto z = data("zigzag.aut");
  auto l = call({"lemma2-check", z, data("uniform_row2.pic"), "--row", "2"});
  CHECK(l.status == 0);
  CHECK(contains(l.out, "departure: column=4 "));
  CHECK(contains(l.out, "violations: 0\n"));
  CHECK(call({"lemma2-check", z, data("uniform_row2.pic"), "--row", "3"}).status == 2);
  auto all = call({"lemma2-check", z, "--max-width", "12"});
  CHECK(all.status == 0);
  CHECK(contains(all.out, "violations: 0\n"));

  auto row = (scratch() / "rowsim.aut").string();
  auto r = call({"rowsim", z, "--entry-state", "l", "--side", "right", "--offset", "2", "-o", row});
  REQUIRE(r.status == 0);
  auto m = read_automaton_file(z);
  CHECK(read_automaton_1d_file(row) == row_restriction(m, m.state("l"), Side::Right, 2));
  CHECK(call({"rowsim", z, "--entry-state", "l", "--side", "up", "--offset", "2", "-o", row}).status == 2);
  CHECK(call({"rowsim", z, "--entry-state", "l", "--side", "left", "--offset", "6", "-o", row}).status == 2);

  auto one = (scratch() / "oneway.aut").string();
  REQUIRE(call({"to-oneway", data("ends_one_1d.aut"), "-o", one}).status == 0);
  auto conv = read_automaton_1d_file(one);
  CHECK_FALSE(conv.two_way());
  CHECK(simulate_1d(conv, "0101"));
  CHECK_FALSE(simulate_1d(conv, "0110"));
}
