#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <regex>

#include "pica/constructions.hpp"
#include "pica/enumeration.hpp"
#include "pica/error.hpp"
#include "pica/one_dim.hpp"
#include "pica/simulation.hpp"
#include "pica/word_ops.hpp"

namespace pica::cli {

namespace {

bool is_one_dim(const std::string& text) {
  static const std::regex variant_1d(R"((^|\n)[ \t]*variant[ \t]+1D-)");
  return std::regex_search(text, variant_1d);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string verdict(bool b) { return b ? "accept" : "reject"; }

std::string dims(const Picture& w) { return std::to_string(w.rows()) + "x" + std::to_string(w.cols()); }

int report_counterexample(std::ostream& out, const Automaton2D& candidate,
                          const std::optional<Counterexample>& cx) {
  if (!cx) {
    out << "verdict: Ok\n";
    return kOk;
  }
  out << "verdict: Counterexample\n"
      << "method: " << cx->method << "\n"
      << "expected: " << verdict(cx->expected) << "\n"
      << "got: " << verdict(cx->got) << "\n"
      << "size: " << dims(cx->word) << "\n"
      << "picture:\n"
      << format_picture(cx->word);
  if (cx->evidence)
    out << "trace:\n" << format_trace(candidate, cx->word.view(), *cx->evidence);
  else
    out << "trace: none\n";
  return kNegative;
}

/// kind A B, with kinds row|col|diag and optionally diag-sep.
struct ConcatTarget {
  std::string kind;
  Automaton2D a;
  Automaton2D b;
};

ConcatTarget concat_target(const std::vector<std::string>& v, bool allow_separated) {
  const auto& kind = v.at(0);
  if (!parse_concat_kind(kind) && !(allow_separated && kind == "diag-sep"))
    throw LookupError("unknown concatenation '" + kind + "'");
  return {kind, read_automaton_file(v.at(1)), read_automaton_file(v.at(2))};
}

// ---- command options ----

struct Options {
  std::string aut, pic, out_path;
  std::vector<std::string> args;
  std::string against_aut;
  std::vector<std::string> against_concat;
  std::string kind;
  bool trace = false, allow_hash = false, lazy = false, no_flips = false;
  int max_rows = 3, max_cols = 3;
  std::size_t budget = kDefaultBudget;
  std::size_t cap = std::size_t(1) << 20;
  std::string alphabet = "01";
  int row = 0, max_width = 0;
  char symbol = '0';
  std::string entry_state, side;
  int offset = 0;
  unsigned n = 0;
};

int cmd_validate(const Options& o, std::ostream& out) {
  std::string text = read_text_file(o.aut);
  std::vector<Violation> violations;
  if (is_one_dim(text)) {
    auto a = parse_automaton_1d(text);
    out << "automaton: " << a.name() << "\nvariant: " << to_string(a.kind())
        << "\nstates: " << a.num_states() << "\n";
    violations = validate(a);
  } else {
    auto a = parse_automaton(text);
    out << "automaton: " << a.name() << "\nvariant: " << to_string(a.variant())
        << "\nmode: " << to_string(a.mode()) << "\nstates: " << a.num_states() << "\n";
    violations = validate(a);
  }
  out << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) out << "violation: " << v.kind << ": " << v.detail << "\n";
  return violations.empty() ? kOk : kNegative;
}

int cmd_run(const Options& o, std::ostream& out) {
  auto a = read_automaton_file(o.aut);
  auto w = read_picture_file(o.pic, o.allow_hash);
  check_alphabet(a.alphabet(), w);
  out << "automaton: " << a.name() << "\npicture: " << dims(w) << "\n";
  bool accepted;
  std::optional<RunTrace> trace;
  if (a.deterministic()) {
    auto r = run_deterministic(a, w.view());
    accepted = r.accepted();
    const char* outcome = r.outcome == RunOutcome::Accepted            ? "accepted"
                          : r.outcome == RunOutcome::RejectedUndefined ? "undefined move"
                                                                       : "loop";
    out << "outcome: " << outcome << "\n";
    trace = std::move(r.trace);
  } else {
    auto runs = accepting_runs(a, w.view(), 1);
    accepted = !runs.empty();
    if (accepted) trace = std::move(runs.front());
  }
  if (o.trace) {
    if (trace)
      out << "trace:\n" << format_trace(a, w.view(), *trace);
    else
      out << "trace: none\n";
  }
  out << "verdict: " << verdict(accepted) << "\n";
  return accepted ? kOk : kNegative;
}

int cmd_enum(const Options& o, std::ostream& out) {
  auto a = read_automaton_file(o.aut);
  auto ws = language_up_to(a, {o.max_rows, o.max_cols}, o.budget);
  out << "automaton: " << a.name() << "\nbounds: " << o.max_rows << "x" << o.max_cols
      << "\naccepted: " << ws.size() << "\n";
  if (!ws.empty()) out << "\n" << format_pictures(ws);
  return kOk;
}

int cmd_concat(const Options& o, std::ostream& out) {
  auto kind = parse_concat_kind(o.kind);
  if (!kind) throw LookupError("unknown concatenation '" + o.kind + "'");
  auto w = read_picture_file(o.args.at(0));
  auto v = read_picture_file(o.args.at(1));
  std::vector<Picture> ws;
  switch (*kind) {
    case ConcatKind::Row: ws.push_back(row_concat(w, v)); break;
    case ConcatKind::Col: ws.push_back(col_concat(w, v)); break;
    case ConcatKind::Diag: ws = diag_concat_words(w, v, Alphabet(o.alphabet), o.cap); break;
  }
  out << "count: " << ws.size() << "\n\n" << format_pictures(ws);
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const auto& k = o.kind;
  std::string text;
  if (k == "witness") {
    if (o.args.size() != 1) throw InputError("construct witness takes one name");
    auto w = build_witness(o.args[0]);
    if (auto* a = std::get_if<Automaton2D>(&w)) {
      out << "automaton: " << a->name() << "\nstates: " << a->num_states() << "\n";
      text = format_automaton(*a);
    } else {
      const auto& ws = std::get<std::vector<Picture>>(w);
      out << "pictures: " << ws.size() << "\n";
      text = format_pictures(ws);
    }
  } else {
    const bool binary = k != "ibr";
    if (k != "ibr" && k != "unary-row" && k != "unary-col" && k != "diag" && k != "diag-sep")
      throw LookupError("unknown construction '" + k + "'");
    if (o.args.size() != (binary ? 2u : 1u))
      throw InputError("construct " + k + " takes " + (binary ? "two automata" : "one automaton"));
    auto a = read_automaton_file(o.args[0]);
    std::optional<Automaton2D> m;
    if (k == "ibr") {
      m = to_ibr(a);
    } else {
      auto b = read_automaton_file(o.args[1]);
      if (k == "unary-row")
        m = unary_row_concat(a, b);
      else if (k == "unary-col")
        m = unary_col_concat(a, b);
      else if (k == "diag")
        m = diag_concat_nondet_2w(a, b);
      else
        m = diag_concat_separated(a, b);
    }
    out << "automaton: " << m->name() << "\nvariant: " << to_string(m->variant())
        << "\nmode: " << to_string(m->mode()) << "\nstates: " << m->num_states() << "\n";
    text = format_automaton(*m);
  }
  write_text_file(o.out_path, text);
  out << "written: " << o.out_path << "\n";
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  auto cand = read_automaton_file(o.aut);
  DimBounds b{o.max_rows, o.max_cols};
  EnumOptions opts{o.budget, o.lazy ? Strategy::DecisionTree : Strategy::Exhaustive};
  out << "candidate: " << cand.name() << "\nbounds: " << o.max_rows << "x" << o.max_cols << "\n";
  if (!o.against_aut.empty()) {
    auto target = read_automaton_file(o.against_aut);
    if (target.alphabet() != cand.alphabet())
      throw AlphabetError("candidate and target must share one alphabet");
    out << "target: " << target.name() << "\n";
    auto cx = equivalent_up_to(cand, [&](PictureView w) { return accepts(target, w); }, b, opts);
    return report_counterexample(out, cand, cx);
  }
  auto t = concat_target(o.against_concat, true);
  if (t.a.alphabet() != cand.alphabet() || t.b.alphabet() != cand.alphabet())
    throw AlphabetError("candidate and factors must share one alphabet");
  out << "target: " << t.kind << " " << t.a.name() << " " << t.b.name() << "\n";
  if (t.kind == "diag-sep") {
    if (o.lazy) throw InputError("--lazy does not apply to diag-sep");
    auto domain = separated_layouts(cand.alphabet(), b, o.budget);
    out << "layouts: " << domain.size() << "\n";
    auto cx = equivalent_on(
        cand, [&](PictureView w) { return separated_diag_membership(t.a, t.b, w); }, domain);
    return report_counterexample(out, cand, cx);
  }
  auto kind = *parse_concat_kind(t.kind);
  auto cx = equivalent_up_to(
      cand, [&](PictureView w) { return concat_membership(kind, t.a, t.b, w); }, b, opts);
  return report_counterexample(out, cand, cx);
}

int cmd_refute(const Options& o, std::ostream& out) {
  auto cand = read_automaton_file(o.aut);
  auto t = concat_target(o.against_concat, false);
  out << "candidate: " << cand.name() << "\nbounds: " << o.max_rows << "x" << o.max_cols
      << "\ntarget: " << t.kind << " " << t.a.name() << " " << t.b.name() << "\n";
  RefuteOptions opts;
  opts.flips = !o.no_flips;
  opts.budget = o.budget;
  auto cx = refute(cand, *parse_concat_kind(t.kind), t.a, t.b, {o.max_rows, o.max_cols}, opts);
  return report_counterexample(out, cand, cx);
}

int cmd_lemma2(const Options& o, std::ostream& out) {
  auto m = read_automaton_file(o.aut);
  const int n = m.num_states();
  out << "automaton: " << m.name() << "\nstates: " << n << "\n";
  if (o.pic.empty()) {
    if (o.max_width < 1) throw InputError("lemma2-check needs a picture and --row, or --max-width");
    auto report = lemma2_check(m, o.max_width, o.symbol);
    out << "max-width: " << o.max_width << "\nsojourns: " << report.sojourns
        << "\nqualifying: " << report.qualifying << "\nviolations: " << report.violations.size()
        << "\n";
    for (const auto& v : report.violations)
      out << "violation: entry=" << m.state_name(v.entry_state) << "@" << v.entry_column
          << " width=" << v.width << " column=" << v.departure << "\n";
    return report.violations.empty() ? kOk : kNegative;
  }
  if (o.row < 1) throw InputError("lemma2-check with a picture needs --row");
  auto w = read_picture_file(o.pic);
  auto deps = downward_departures(m, w, o.row);
  int violations = 0;
  out << "row: " << o.row << "\nwidth: " << w.cols() << "\ndepartures: " << deps.size() << "\n";
  for (const auto& d : deps) {
    bool qualifying = d.visited_first || d.visited_last;
    bool ok = !qualifying || within_lemma2_bound(d.column, w.cols(), n);
    if (!ok) ++violations;
    out << "departure: column=" << d.column << " entry=" << m.state_name(d.entry_state) << "@"
        << d.entry_column << " visited_first=" << yes_no(d.visited_first)
        << " visited_last=" << yes_no(d.visited_last) << " distance="
        << std::min(d.column, w.cols() - d.column + 1) << " within_bound=" << yes_no(ok) << "\n";
  }
  out << "violations: " << violations << "\n";
  return violations == 0 ? kOk : kNegative;
}

int cmd_rowsim(const Options& o, std::ostream& out) {
  auto m = read_automaton_file(o.aut);
  auto side = parse_side(o.side);
  if (!side) throw LookupError("unknown side '" + o.side + "'");
  auto q = m.find_state(o.entry_state);
  if (!q) throw LookupError("unknown state '" + o.entry_state + "'");
  auto N = row_restriction(m, *q, *side, o.offset);
  write_text_file(o.out_path, format_automaton(N));
  out << "automaton: " << N.name() << "\nstates: " << N.num_states()
      << "\nbound: " << 2 * m.num_states() + 3 << "\nwritten: " << o.out_path << "\n";
  return kOk;
}

int cmd_to_oneway(const Options& o, std::ostream& out) {
  auto a = read_automaton_1d_file(o.aut);
  auto one = two_way_to_one_way(a);
  write_text_file(o.out_path, format_automaton(one));
  out << "automaton: " << one.name() << "\nstates: " << one.num_states()
      << "\nwritten: " << o.out_path << "\n";
  return kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  auto h = kapoutsis_bound(o.n);
  out << "h(" << o.n << ") = " << h.h.str() << "\n";
  out << "k(" << o.n << ") = h(" << 2 * o.n + 3 << ") + 1 = " << separation_k(o.n).str() << "\n";
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-dimensional automata toolkit", "pica"};
  app.require_subcommand(1);
  Options o;

  auto bounds = [&](CLI::App* c) {
    c->add_option("--max-rows", o.max_rows, "Row bound")->check(CLI::PositiveNumber);
    c->add_option("--max-cols", o.max_cols, "Column bound")->check(CLI::PositiveNumber);
    c->add_option("--budget", o.budget, "Maximum pictures (or tree nodes) enumerated");
  };

  auto* validate = app.add_subcommand("validate", "Check an automaton file");
  validate->add_option("aut", o.aut)->required();

  auto* run = app.add_subcommand("run", "Run an automaton on a picture");
  run->add_option("aut", o.aut)->required();
  run->add_option("pic", o.pic)->required();
  run->add_flag("--trace", o.trace, "Print the run");
  run->add_flag("--allow-hash", o.allow_hash, "Accept '#' cells in the picture");

  auto* enumerate = app.add_subcommand("enum", "List accepted pictures within bounds");
  enumerate->add_option("aut", o.aut)->required();
  bounds(enumerate);

  auto* concat = app.add_subcommand("concat", "Concatenate two pictures");
  concat->add_option("kind", o.kind, "row|col|diag")->required();
  concat->add_option("pics", o.args)->required()->expected(2);
  concat->add_option("--cap", o.cap, "Maximum diagonal results");
  concat->add_option("--alphabet", o.alphabet, "Filler symbols for diag");

  auto* construct = app.add_subcommand("construct", "Build an automaton or witness");
  construct->add_option("kind", o.kind, "ibr|unary-row|unary-col|diag|diag-sep|witness")->required();
  construct->add_option("inputs", o.args)->required()->expected(1, 2);
  construct->add_option("-o,--output", o.out_path)->required();

  auto* equiv = app.add_subcommand("equiv", "Compare a candidate with a target within bounds");
  equiv->add_option("cand", o.aut)->required();
  auto* against_aut = equiv->add_option("--against-aut", o.against_aut);
  auto* against_concat =
      equiv->add_option("--against-concat", o.against_concat, "row|col|diag|diag-sep A B")
          ->expected(3);
  against_aut->excludes(against_concat);
  equiv->add_flag("--lazy", o.lazy, "Decision-tree enumeration");
  bounds(equiv);

  auto* refute_cmd = app.add_subcommand("refute", "Search for a counterexample to a candidate");
  refute_cmd->add_option("cand", o.aut)->required();
  refute_cmd->add_option("--target-concat", o.against_concat, "row|col|diag A B")
      ->required()
      ->expected(3);
  refute_cmd->add_flag("--no-flips", o.no_flips, "Skip flip attacks");
  bounds(refute_cmd);

  auto* lemma2 = app.add_subcommand("lemma2-check", "Departure distances of a det 3W machine");
  lemma2->add_option("aut", o.aut)->required();
  lemma2->add_option("pic", o.pic);
  lemma2->add_option("--row", o.row)->check(CLI::PositiveNumber);
  lemma2->add_option("--max-width", o.max_width, "Check every entry configuration up to this width")
      ->check(CLI::PositiveNumber);
  lemma2->add_option("--symbol", o.symbol, "Row symbol for --max-width");

  auto* rowsim = app.add_subcommand("rowsim", "One-row two-way simulation of a det 3W machine");
  rowsim->add_option("aut", o.aut)->required();
  rowsim->add_option("--entry-state", o.entry_state)->required();
  rowsim->add_option("--side", o.side, "left|right")->required();
  rowsim->add_option("--offset", o.offset)->required();
  rowsim->add_option("-o,--output", o.out_path)->required();

  auto* to_oneway = app.add_subcommand("to-oneway", "Convert a two-way 1D automaton");
  to_oneway->add_option("aut", o.aut)->required();
  to_oneway->add_option("-o,--output", o.out_path)->required();

  auto* bound = app.add_subcommand("bound", "Evaluate h(n)");
  bound->add_option("n", o.n)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (run->parsed()) return cmd_run(o, out);
    if (enumerate->parsed()) return cmd_enum(o, out);
    if (concat->parsed()) return cmd_concat(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (equiv->parsed()) {
      if (o.against_aut.empty() && o.against_concat.empty())
        throw InputError("equiv needs --against-aut or --against-concat");
      return cmd_equiv(o, out);
    }
    if (refute_cmd->parsed()) return cmd_refute(o, out);
    if (lemma2->parsed()) return cmd_lemma2(o, out);
    if (rowsim->parsed()) return cmd_rowsim(o, out);
    if (to_oneway->parsed()) return cmd_to_oneway(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pica::cli
