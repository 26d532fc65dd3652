#include "pica/constructions.hpp"

#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <string>

#include "pica/error.hpp"

namespace pica {

namespace {

void require_2w(const Automaton2D& a, std::string_view op) {
  if (a.variant() != Variant::TwoWay)
    throw UnsupportedVariant(std::string(op) + " needs a two-way automaton, got " +
                             std::string(to_string(a.variant())) + " '" + a.name() + "'");
  if (a.initial() < 0 || a.accept() < 0)
    throw InputError("automaton '" + a.name() + "' lacks an initial or accepting state");
}

void require_same_alphabet(const Automaton2D& a, const Automaton2D& b) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetError("alphabets of '" + a.name() + "' and '" + b.name() + "' differ");
}

std::string fresh_name(const Automaton2D& a, std::string name) {
  while (a.find_state(name)) name += '\'';
  return name;
}

/// IBR form in which accept is entered only on '#' reads: a `sweep` state walks
/// down to the bottom border and takes over every symbol-reading move into accept.
struct Normal {
  Automaton2D a;
  std::vector<char> ready;  ///< reading '#' here accepts

  bool is_ready(StateId q) const { return ready[q] != 0; }
};

Normal normalize(const Automaton2D& src) {
  Automaton2D a = to_ibr(src);
  const StateId acc = a.accept();
  StateId sweep = a.add_state(fresh_name(a, "sweep"));
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (q == acc || q == sweep) continue;
    for (char s : a.alphabet()) {
      std::vector<Move> images(a.moves(q, s).begin(), a.moves(q, s).end());
      a.clear_transitions(q, s);
      for (auto m : images) a.add_transition(q, s, m.to == acc ? sweep : m.to, m.dir);
    }
  }
  for (char s : a.alphabet()) a.add_transition(sweep, s, sweep, Direction::D);
  a.add_transition(sweep, kBoundary, acc, Direction::D);
  if (a.initial() == acc) a.set_initial(sweep);

  Normal n{std::move(a), {}};
  n.ready.assign(n.a.num_states(), 0);
  for (StateId q = 0; q < n.a.num_states(); ++q)
    for (const auto& m : n.a.moves(q, kBoundary))
      if (m.to == acc) n.ready[q] = 1;
  return n;
}

/// Breadth-first builder: states are keys, named on first use, expanded once.
template <class Key>
class ReachableBuilder {
 public:
  ReachableBuilder(Automaton2D& out, std::function<std::string(const Key&)> name)
      : out_(out), name_(std::move(name)) {}

  StateId id(const Key& k) {
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    StateId q = out_.add_state(name_(k));
    ids_.emplace(k, q);
    pending_.push_back(k);
    return q;
  }

  bool next(Key& k) {
    if (pending_.empty()) return false;
    k = pending_.front();
    pending_.pop_front();
    return true;
  }

 private:
  Automaton2D& out_;
  std::function<std::string(const Key&)> name_;
  std::map<Key, StateId> ids_;
  std::deque<Key> pending_;
};

// ---- unary row concatenation ----

enum class Turn : std::uint8_t { A, B, J };
enum class Last : std::uint8_t { First, D, R };

struct RowKey {
  enum Kind : std::uint8_t { Start, One, Two, Final } kind = Start;
  CaseTag tag = CaseTag::BottomRight;
  Turn turn = Turn::A;
  StateId qa = -1;  ///< One: A's state; Two: the remaining machine's state
  StateId qb = -1;
  Last last = Last::First;

  auto operator<=>(const RowKey&) const = default;
};

char turn_char(Turn t) { return t == Turn::A ? 'A' : t == Turn::B ? 'B' : 'J'; }

bool a_guesses(CaseTag t) { return t == CaseTag::BottomRight || t == CaseTag::BottomBottomAfter; }
bool b_guesses(CaseTag t) { return t == CaseTag::RightBottom || t == CaseTag::BottomBottomBefore; }
/// Machine left running in phase two: B after an A guess, A after a B guess.
bool two_runs_b(CaseTag t) { return a_guesses(t); }
/// Border on which the phase-two machine must finish.
Direction final_border(CaseTag t) {
  return t == CaseTag::BottomRight || t == CaseTag::RightBottom ? Direction::R : Direction::D;
}

class RowConcat {
 public:
  RowConcat(const Automaton2D& a, const Automaton2D& b)
      : A_(normalize(a)), B_(normalize(b)),
        m_("row_" + a.name() + "_" + b.name(), Variant::TwoWay, Mode::Nondeterministic,
           a.alphabet()),
        builder_(m_, [this](const RowKey& k) { return name(k); }), x_(a.alphabet()[0]) {}

  Automaton2D build() {
    m_.set_initial(builder_.id(RowKey{}));
    m_.set_accept(m_.add_state("accept"));
    RowKey k;
    while (builder_.next(k)) {
      StateId q = builder_.id(k);
      for (auto& [to, dir] : moves(k, x_)) m_.add_transition(q, x_, builder_.id(to), dir);
      if (auto d = boundary(k)) m_.add_transition(q, kBoundary, m_.accept(), *d);
    }
    return std::move(m_);
  }

 private:
  using Out = std::vector<std::pair<RowKey, Direction>>;

  std::string name(const RowKey& k) const {
    switch (k.kind) {
      case RowKey::Start: return "start";
      case RowKey::Final: return "RR|final";
      case RowKey::One:
        return std::string(to_string(k.tag)) + "|" + turn_char(k.turn) + "|" +
               A_.a.state_name(k.qa) + "|" + B_.a.state_name(k.qb);
      case RowKey::Two: {
        const Normal& x = two_runs_b(k.tag) ? B_ : A_;
        const char* last = k.last == Last::First ? "first" : k.last == Last::D ? "D" : "R";
        return std::string(to_string(k.tag)) + "|2" + (two_runs_b(k.tag) ? "B" : "A") + "|" +
               x.a.state_name(k.qa) + "|" + last;
      }
    }
    return "?";
  }

  static RowKey one(CaseTag tag, Turn t, StateId qa, StateId qb) {
    return {RowKey::One, tag, t, qa, qb, Last::First};
  }
  static RowKey two(CaseTag tag, StateId q, Last last) {
    return {RowKey::Two, tag, Turn::A, q, -1, last};
  }

  /// Turns allowed after a move of `who`. Within a column the first machine in the
  /// case's order moves down, then the second, then both move right together.
  static std::vector<Turn> after(CaseTag tag, Turn who) {
    Turn first = tag == CaseTag::BottomBottomBefore ? Turn::B : Turn::A;
    Turn second = first == Turn::A ? Turn::B : Turn::A;
    if (who == Turn::J || who == first) return {first, second, Turn::J};
    return {second, Turn::J};
  }

  Out moves(const RowKey& k, char x) const {
    Out out;
    switch (k.kind) {
      case RowKey::Start:
        for (CaseTag tag : kAllCaseTags) {
          for (Turn t : {Turn::A, Turn::B, Turn::J}) {
            RowKey entry = one(tag, t, A_.a.initial(), B_.a.initial());
            if (tag == CaseTag::RightRight) {
              out.push_back({entry, Direction::D});  // padding row
            } else {
              auto more = moves(entry, x);
              out.insert(out.end(), more.begin(), more.end());
            }
          }
        }
        break;
      case RowKey::One:
        one_moves(k, x, out);
        break;
      case RowKey::Two: {
        const Normal& n = two_runs_b(k.tag) ? B_ : A_;
        for (const auto& mv : n.a.moves(k.qa, x))
          out.push_back({two(k.tag, mv.to, mv.dir == Direction::D ? Last::D : Last::R), mv.dir});
        break;
      }
      case RowKey::Final:
        break;
    }
    return out;
  }

  void one_moves(const RowKey& k, char x, Out& out) const {
    switch (k.turn) {
      case Turn::A:
        for (const auto& mv : A_.a.moves(k.qa, x)) {
          if (mv.dir != Direction::D) continue;
          for (Turn t : after(k.tag, Turn::A)) out.push_back({one(k.tag, t, mv.to, k.qb), Direction::D});
          if (a_guesses(k.tag) && A_.is_ready(mv.to))
            out.push_back({two(k.tag, k.qb, Last::First), Direction::D});
        }
        break;
      case Turn::B:
        for (const auto& mv : B_.a.moves(k.qb, x)) {
          if (mv.dir != Direction::D) continue;
          for (Turn t : after(k.tag, Turn::B)) out.push_back({one(k.tag, t, k.qa, mv.to), Direction::D});
          if (b_guesses(k.tag) && B_.is_ready(mv.to))
            out.push_back({two(k.tag, k.qa, Last::First), Direction::D});
        }
        break;
      case Turn::J:
        for (const auto& ma : A_.a.moves(k.qa, x)) {
          if (ma.dir != Direction::R) continue;
          for (const auto& mb : B_.a.moves(k.qb, x)) {
            if (mb.dir != Direction::R) continue;
            for (Turn t : after(k.tag, Turn::J))
              out.push_back({one(k.tag, t, ma.to, mb.to), Direction::R});
            if (k.tag == CaseTag::RightRight && A_.is_ready(ma.to) && B_.is_ready(mb.to))
              out.push_back({RowKey{RowKey::Final}, Direction::R});
          }
        }
        break;
    }
  }

  std::optional<Direction> boundary(const RowKey& k) const {
    if (k.kind == RowKey::Final) return Direction::D;
    if (k.kind != RowKey::Two || k.last == Last::First) return std::nullopt;
    const Normal& n = two_runs_b(k.tag) ? B_ : A_;
    Direction came = k.last == Last::D ? Direction::D : Direction::R;
    if (n.is_ready(k.qa) && came == final_border(k.tag)) return Direction::D;
    return std::nullopt;
  }

  Normal A_;
  Normal B_;
  Automaton2D m_;
  ReachableBuilder<RowKey> builder_;
  char x_;
};

// ---- diagonal concatenations ----

enum class Phase : std::uint8_t { A, SlideR, SlideD, BFirst, B };

struct DiagKey {
  Phase phase = Phase::A;
  StateId q = -1;
  Last last = Last::First;
  auto operator<=>(const DiagKey&) const = default;
};

}  // namespace

std::string_view to_string(CaseTag t) noexcept {
  switch (t) {
    case CaseTag::BottomRight: return "BR";
    case CaseTag::RightBottom: return "RB";
    case CaseTag::BottomBottomBefore: return "BBB";
    case CaseTag::BottomBottomAfter: return "BBA";
    case CaseTag::RightRight: return "RR";
  }
  return "?";
}

std::optional<CaseTag> parse_case_tag(std::string_view s) noexcept {
  for (CaseTag t : kAllCaseTags)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::optional<CaseTag> case_of_state(std::string_view state_name) noexcept {
  auto bar = state_name.find('|');
  if (bar == std::string_view::npos) return std::nullopt;
  return parse_case_tag(state_name.substr(0, bar));
}

std::set<StateId> boundary_reach_set(const Automaton2D& a) {
  require_2w(a, "boundary_reach_set");
  std::set<StateId> r{a.accept()};
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (r.contains(q)) continue;
      for (const auto& m : a.moves(q, kBoundary)) {
        if (r.contains(m.to)) {
          r.insert(q);
          changed = true;
          break;
        }
      }
    }
  }
  return r;
}

Automaton2D to_ibr(const Automaton2D& a) {
  auto r = boundary_reach_set(a);
  Automaton2D out = a;
  for (StateId q = 0; q < out.num_states(); ++q) {
    if (q == out.accept()) continue;
    out.clear_transitions(q, kBoundary);
    if (r.contains(q)) out.add_transition(q, kBoundary, out.accept(), Direction::D);
  }
  return out;
}

bool is_ibr(const Automaton2D& a) {
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (q == a.accept()) continue;
    auto images = a.moves(q, kBoundary);
    if (images.size() > 1) return false;
    if (images.size() == 1 && images[0].to != a.accept()) return false;
  }
  return true;
}

Automaton2D unary_row_concat(const Automaton2D& a, const Automaton2D& b) {
  require_2w(a, "unary_row_concat");
  require_2w(b, "unary_row_concat");
  require_same_alphabet(a, b);
  if (!a.alphabet().is_unary()) throw AlphabetError("unary_row_concat needs a unary alphabet");
  return RowConcat(a, b).build();
}

Automaton2D unary_col_concat(const Automaton2D& a, const Automaton2D& b) {
  require_2w(a, "unary_col_concat");
  require_2w(b, "unary_col_concat");
  Automaton2D m = transpose_automaton(unary_row_concat(transpose_automaton(a), transpose_automaton(b)));
  m.set_name("col_" + a.name() + "_" + b.name());
  return m;
}

Automaton2D diag_concat_nondet_2w(const Automaton2D& a, const Automaton2D& b) {
  require_2w(a, "diag_concat_nondet_2w");
  require_2w(b, "diag_concat_nondet_2w");
  require_same_alphabet(a, b);
  const Normal A = normalize(a);
  const Normal B = normalize(b);
  Automaton2D m("diag_" + a.name() + "_" + b.name(), Variant::TwoWay, Mode::Nondeterministic,
                a.alphabet());
  ReachableBuilder<DiagKey> builder(m, [&](const DiagKey& k) -> std::string {
    switch (k.phase) {
      case Phase::A: return "A|" + A.a.state_name(k.q);
      case Phase::SlideR: return "slideR";
      case Phase::SlideD: return "slideD";
      case Phase::BFirst: return "B|" + B.a.state_name(k.q) + "|first";
      case Phase::B: return "B|" + B.a.state_name(k.q);
    }
    return "?";
  });
  m.set_initial(builder.id({Phase::A, A.a.initial()}));
  m.set_accept(m.add_state("accept"));
  const DiagKey b_start{Phase::BFirst, B.a.initial()};

  DiagKey k;
  while (builder.next(k)) {
    StateId q = builder.id(k);
    for (char x : m.alphabet()) {
      switch (k.phase) {
        case Phase::A:
          for (const auto& mv : A.a.moves(k.q, x)) {
            m.add_transition(q, x, builder.id({Phase::A, mv.to}), mv.dir);
            // Pretend the next cell is A's border: the head is now one past A's word.
            if (A.is_ready(mv.to))
              m.add_transition(q, x, builder.id({mv.dir == Direction::D ? Phase::SlideR : Phase::SlideD}),
                               mv.dir);
          }
          break;
        case Phase::SlideR:
        case Phase::SlideD: {
          Direction d = k.phase == Phase::SlideR ? Direction::R : Direction::D;
          m.add_transition(q, x, q, d);
          m.add_transition(q, x, builder.id(b_start), d);
          break;
        }
        case Phase::BFirst:
        case Phase::B:
          for (const auto& mv : B.a.moves(k.q, x)) m.add_transition(q, x, builder.id({Phase::B, mv.to}), mv.dir);
          break;
      }
    }
    if (k.phase == Phase::B && B.is_ready(k.q)) m.add_transition(q, kBoundary, m.accept(), Direction::D);
  }
  return m;
}

Automaton2D diag_concat_separated(const Automaton2D& a, const Automaton2D& b) {
  require_2w(a, "diag_concat_separated");
  require_2w(b, "diag_concat_separated");
  require_same_alphabet(a, b);
  const Normal A = normalize(a);
  const Automaton2D B = to_ibr(b);
  Mode mode = a.deterministic() && b.deterministic() ? Mode::Deterministic : Mode::Nondeterministic;
  Automaton2D m("sep_" + a.name() + "_" + b.name(), Variant::TwoWay, mode, a.alphabet());
  ReachableBuilder<DiagKey> builder(m, [&](const DiagKey& k) -> std::string {
    switch (k.phase) {
      case Phase::A:
        return "A|" + A.a.state_name(k.q) + "|" +
               (k.last == Last::First ? "-" : k.last == Last::D ? "D" : "R");
      case Phase::SlideR: return "crossR";
      case Phase::SlideD: return "crossD";
      case Phase::BFirst:
      case Phase::B: return "B|" + B.state_name(k.q);
    }
    return "?";
  });
  m.set_initial(builder.id({Phase::A, A.a.initial(), Last::First}));
  StateId acc = m.add_state("accept");
  m.set_accept(acc);

  DiagKey k;
  while (builder.next(k)) {
    StateId q = builder.id(k);
    switch (k.phase) {
      case Phase::A:
        for (char x : m.alphabet())
          for (const auto& mv : A.a.moves(k.q, x))
            m.add_transition(q, x, builder.id({Phase::A, mv.to, mv.dir == Direction::D ? Last::D : Last::R}),
                             mv.dir);
        // The separator is A's border: below it lies the bottom-left block, right of it the top-right one.
        if (A.is_ready(k.q) && k.last == Last::D)
          m.add_transition(q, kBoundary, builder.id({Phase::SlideR}), Direction::D);
        if (A.is_ready(k.q) && k.last == Last::R)
          m.add_transition(q, kBoundary, builder.id({Phase::SlideD}), Direction::R);
        break;
      case Phase::SlideR:
      case Phase::SlideD: {
        Direction d = k.phase == Phase::SlideR ? Direction::R : Direction::D;
        for (char x : m.alphabet()) m.add_transition(q, x, q, d);
        StateId start = B.initial() == B.accept() ? acc : builder.id({Phase::B, B.initial()});
        m.add_transition(q, kBoundary, start, d);
        break;
      }
      case Phase::BFirst:
      case Phase::B:
        if (k.q == B.accept()) break;
        for (int s = 0; s <= B.boundary_index(); ++s) {
          char x = B.symbol_at(s);
          for (const auto& mv : B.moves(k.q, x))
            m.add_transition(q, x, mv.to == B.accept() ? acc : builder.id({Phase::B, mv.to}), mv.dir);
        }
        break;
    }
  }
  return m;
}

std::vector<Picture> thm9_family(int k) {
  if (k < 1) throw RangeError("thm9-X(k) needs k >= 1");
  if (k > 12) throw CapacityError("thm9-X(k) family too large for k > 12");
  const int n = 2 * k;
  std::string top(n, '0');
  std::string second = std::string(k, '0') + "1" + std::string(k - 1, '0');
  std::vector<Picture> out;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    std::string last(n, '0');
    for (int c = 0; c < n; ++c)
      if (bits & (1u << (n - 1 - c))) last[c] = '1';
    out.push_back(Picture::from_rows({top, second, top, last}));
  }
  return out;
}

namespace {

Automaton2D make(std::string name, Variant v, std::string_view symbols,
                 std::initializer_list<const char*> states) {
  Automaton2D a(std::move(name), v, Mode::Deterministic, Alphabet(symbols));
  for (const char* s : states) a.add_state(s);
  a.set_initial(0);
  a.set_accept(a.state("accept"));
  return a;
}

void on(Automaton2D& a, const char* from, char sym, const char* to, Direction d) {
  a.add_transition(a.state(from), sym, a.state(to), d);
}

}  // namespace

Witness build_witness(std::string_view name) {
  using D = Direction;
  if (name == "first-row-zeros") {
    auto a = make("first_row_zeros", Variant::TwoWay, "01", {"q0", "accept"});
    on(a, "q0", '0', "q0", D::R);
    on(a, "q0", '#', "accept", D::R);
    return a;
  }
  if (name == "top-left-one") {
    auto a = make("top_left_one", Variant::TwoWay, "01", {"q0", "accept"});
    on(a, "q0", '1', "accept", D::D);
    return a;
  }
  if (name == "thm9-A") {
    auto a = make("thm9_A", Variant::ThreeWay, "01", {"s0", "back", "chk", "accept"});
    on(a, "s0", '0', "s0", D::R);
    on(a, "s0", '#', "back", D::L);
    on(a, "back", '0', "chk", D::D);
    on(a, "chk", '#', "accept", D::D);
    return a;
  }
  if (name == "thm9-B") {
    auto a = make("thm9_B", Variant::ThreeWay, "01",
                  {"s0", "r1", "r1b", "r2", "r2b", "r3", "r3b", "chk", "accept"});
    on(a, "s0", '1', "r1", D::R);
    on(a, "r1", '0', "r1", D::R);
    on(a, "r1", '#', "r1b", D::L);
    on(a, "r1b", '0', "r2", D::D);
    on(a, "r1b", '1', "r2", D::D);
    on(a, "r2", '0', "r2", D::L);
    on(a, "r2", '#', "r2b", D::R);
    on(a, "r2b", '0', "r3", D::D);
    on(a, "r3", '0', "r3", D::R);
    on(a, "r3", '#', "r3b", D::L);
    on(a, "r3b", '0', "chk", D::D);
    on(a, "chk", '#', "accept", D::D);
    return a;
  }
  if (name.starts_with("thm9-X(") && name.ends_with(")")) {
    auto digits = name.substr(7, name.size() - 8);
    int k = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && p == digits.data() + digits.size()) return thm9_family(k);
  }
  throw LookupError("unknown witness '" + std::string(name) + "'");
}

}  // namespace pica
