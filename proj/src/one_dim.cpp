#include "pica/one_dim.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pica/error.hpp"
#include "pica/simulation.hpp"
#include "text_util.hpp"

namespace pica {

std::string_view to_string(Kind1D k) noexcept { return k == Kind1D::TwoWay ? "1D-2W" : "1D-1W"; }

Automaton1D::Automaton1D(std::string name, Kind1D kind, Alphabet alphabet)
    : name_(std::move(name)), kind_(kind), alphabet_(std::move(alphabet)) {}

std::optional<StateId> Automaton1D::find_state(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

StateId Automaton1D::state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw InputError("unknown state '" + std::string(name) + "'");
}

StateId Automaton1D::add_state(std::string name) {
  if (name.empty()) throw InputError("empty state name");
  if (ids_.count(name)) throw InputError("duplicate state '" + name + "'");
  StateId q = num_states();
  ids_.emplace(name, q);
  names_.push_back(std::move(name));
  accepting_.push_back(0);
  delta_.resize(delta_.size() + width());
  return q;
}

void Automaton1D::set_initial(StateId q) {
  if (q < 0 || q >= num_states()) throw InputError("initial state out of range");
  initial_ = q;
}

void Automaton1D::set_accept(StateId q) {
  if (!two_way()) throw InputError("one-way machines take a set of accepting states");
  if (q < 0 || q >= num_states()) throw InputError("accept state out of range");
  if (accept_ >= 0) accepting_[accept_] = 0;
  accept_ = q;
  accepting_[q] = 1;
}

void Automaton1D::add_accepting(StateId q) {
  if (two_way()) throw InputError("two-way machines have a single accepting state");
  if (q < 0 || q >= num_states()) throw InputError("accept state out of range");
  accepting_[q] = 1;
}

int Automaton1D::symbol_index(char c) const noexcept {
  if (c == kBoundary) return static_cast<int>(alphabet_.size());
  return alphabet_.index_of(c);
}

void Automaton1D::set_transition(StateId q, char symbol, StateId to, Direction dir) {
  if (q < 0 || q >= num_states() || to < 0 || to >= num_states())
    throw InputError("state id out of range");
  int s = symbol_index(symbol);
  if (s < 0) throw InputError(std::string("symbol '") + symbol + "' not in alphabet");
  if (!two_way() && symbol == kBoundary) throw InputError("one-way machines do not read '#'");
  auto& slot = delta_[std::size_t(q) * width() + s];
  if (slot) throw InputError("transition for (" + names_[q] + ", " + symbol + ") already defined");
  slot = Move{to, two_way() ? dir : Direction::R};
}

std::optional<Move> Automaton1D::transition(StateId q, char symbol) const {
  int s = symbol_index(symbol);
  if (s < 0) throw InputError(std::string("symbol '") + symbol + "' not in alphabet");
  return transition_at(q, s);
}

std::vector<Violation> validate(const Automaton1D& a) {
  std::vector<Violation> out;
  if (a.initial() < 0) out.push_back({"missing initial state", "no initial state declared"});
  if (a.two_way() && a.accept() < 0)
    out.push_back({"missing accept state", "no accepting state declared"});
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (int s = 0; s <= static_cast<int>(a.alphabet().size()); ++s) {
      auto m = a.transition_at(q, s);
      if (!m) continue;
      std::string where = a.state_name(q) + " on symbol " + std::to_string(s);
      if (a.two_way() && q == a.accept()) out.push_back({"transition from accepting state", where});
      if (a.two_way() && m->dir != Direction::L && m->dir != Direction::R)
        out.push_back({"illegal direction for variant", where});
    }
  }
  return out;
}

Automaton1D parse_automaton_1d(std::string_view text) {
  auto lines = detail::tokenized_lines(text);
  if (lines.empty()) throw ParseError(0, "empty automaton file");
  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "automaton")
    throw ParseError(head.number, "expected 'automaton <name>'");

  std::optional<Kind1D> kind;
  std::optional<std::string> alphabet, initial;
  std::vector<std::string> states, accepts;
  std::vector<const detail::Line*> transitions;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto& t = l.tokens;
    if (t[0] == "variant" && t.size() == 2) {
      if (t[1] == "1D-2W")
        kind = Kind1D::TwoWay;
      else if (t[1] == "1D-1W")
        kind = Kind1D::OneWay;
      else
        throw ParseError(l.number, "unknown variant '" + t[1] + "'");
    } else if (t[0] == "mode" && t.size() == 2) {
      if (t[1] != "det") throw ParseError(l.number, "one-dimensional machines are deterministic");
    } else if (t[0] == "alphabet") {
      std::string syms;
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (t[k].size() != 1) throw ParseError(l.number, "symbols are single characters");
        syms += t[k];
      }
      alphabet = syms;
    } else if (t[0] == "states") {
      states.assign(t.begin() + 1, t.end());
    } else if (t[0] == "initial" && t.size() == 2) {
      initial = t[1];
    } else if (t[0] == "accept") {
      accepts.assign(t.begin() + 1, t.end());
    } else if ((t.size() == 4 || t.size() == 5) && t[2] == "->") {
      transitions.push_back(&l);
    } else {
      throw ParseError(l.number, "unrecognized line");
    }
  }
  if (!kind) throw ParseError(head.number, "missing 'variant'");
  if (!alphabet) throw ParseError(head.number, "missing 'alphabet'");
  if (states.empty()) throw ParseError(head.number, "missing 'states'");
  if (!initial) throw ParseError(head.number, "missing 'initial'");
  if (*kind == Kind1D::TwoWay && accepts.size() != 1)
    throw ParseError(head.number, "two-way machines need exactly one accepting state");

  try {
    Automaton1D a(head.tokens[1], *kind, Alphabet(*alphabet));
    for (const auto& s : states) a.add_state(s);
    a.set_initial(a.state(*initial));
    for (const auto& s : accepts) {
      if (a.two_way())
        a.set_accept(a.state(s));
      else
        a.add_accepting(a.state(s));
    }
    for (const auto* l : transitions) {
      const auto& t = l->tokens;
      try {
        if (t[1].size() != 1) throw InputError("symbols are single characters");
        Direction d = Direction::R;
        if (a.two_way()) {
          if (t.size() != 5) throw InputError("two-way transitions need a direction");
          auto pd = parse_direction(t[4]);
          if (!pd || (*pd != Direction::L && *pd != Direction::R))
            throw InputError("two-way directions are L or R");
          d = *pd;
        } else if (t.size() != 4) {
          throw InputError("one-way transitions take no direction");
        }
        a.set_transition(a.state(t[0]), t[1][0], a.state(t[3]), d);
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(l->number, e.what());
      }
    }
    return a;
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(head.number, e.what());
  }
}

Automaton1D read_automaton_1d_file(const std::filesystem::path& path) {
  return parse_automaton_1d(read_text_file(path));
}

std::string format_automaton(const Automaton1D& a) {
  std::string out = "automaton " + a.name() + "\nvariant " + std::string(to_string(a.kind())) +
                    "\nmode det\nalphabet";
  for (char c : a.alphabet()) {
    out += ' ';
    out += c;
  }
  std::vector<std::string> names, accepting;
  for (StateId q = 0; q < a.num_states(); ++q) {
    names.push_back(a.state_name(q));
    if (a.accepting(q)) accepting.push_back(a.state_name(q));
  }
  out += "\nstates " + detail::join(names, " ") + "\n";
  out += "initial " + a.state_name(a.initial()) + "\n";
  out += "accept " + detail::join(accepting, " ") + "\n";
  const int k = static_cast<int>(a.alphabet().size());
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (int s = 0; s <= k; ++s) {
      auto m = a.transition_at(q, s);
      if (!m) continue;
      out += a.state_name(q) + ' ' + (s == k ? kBoundary : a.alphabet()[s]) + " -> " +
             a.state_name(m->to);
      if (a.two_way()) out += std::string(" ") + to_char(m->dir);
      out += '\n';
    }
  }
  return out;
}

bool simulate_1d(const Automaton1D& a, std::string_view s) {
  if (a.initial() < 0) throw InputError("automaton '" + a.name() + "' has no initial state");
  std::vector<int> tape;
  tape.reserve(s.size() + 2);
  const int boundary = static_cast<int>(a.alphabet().size());
  tape.push_back(boundary);
  for (char c : s) {
    int i = a.alphabet().index_of(c);
    if (i < 0) throw InputError(std::string("symbol '") + c + "' not in the automaton's alphabet");
    tape.push_back(i);
  }
  tape.push_back(boundary);

  if (!a.two_way()) {
    StateId q = a.initial();
    for (std::size_t i = 1; i + 1 < tape.size(); ++i) {
      auto m = a.transition_at(q, tape[i]);
      if (!m) return false;
      q = m->to;
    }
    return a.accepting(q);
  }

  if (a.accept() < 0) throw InputError("automaton '" + a.name() + "' has no accepting state");
  const int cells = static_cast<int>(tape.size());
  std::vector<char> seen(std::size_t(a.num_states()) * cells, 0);
  StateId q = a.initial();
  int pos = 1;
  for (;;) {
    if (q == a.accept()) return true;
    char& mark = seen[std::size_t(q) * cells + pos];
    if (mark) return false;
    mark = 1;
    auto m = a.transition_at(q, tape[pos]);
    if (!m) return false;
    q = m->to;
    pos += m->dir == Direction::L ? -1 : 1;
    if (q == a.accept()) return true;
    if (pos < 0 || pos >= cells) return false;
  }
}

// ---- crossing tables ----

namespace {

constexpr int kAcc = -1;
constexpr int kRej = -2;

/// Runs the two-way machine at one cell holding `sym`, starting in `s`. Leaving left
/// consults `table` (outcome of re-entering the prefix); leaving right returns the
/// state; kAcc / kRej otherwise.
int settle(const Automaton1D& a, int sym, int s, const std::vector<int>& table) {
  std::vector<char> seen(a.num_states(), 0);
  while (s >= 0) {
    if (s == a.accept()) return kAcc;
    if (seen[s]) return kRej;
    seen[s] = 1;
    auto m = a.transition_at(s, sym);
    if (!m) return kRej;
    if (m->to == a.accept()) return kAcc;
    if (m->dir == Direction::R) return m->to;
    s = table[m->to];
  }
  return s;
}

}  // namespace

Automaton1D two_way_to_one_way(const Automaton1D& a) {
  if (!a.two_way()) throw PreconditionError("two_way_to_one_way needs a two-way machine");
  if (a.initial() < 0 || a.accept() < 0)
    throw InputError("automaton '" + a.name() + "' lacks an initial or accepting state");
  const int n = a.num_states();
  const int boundary = static_cast<int>(a.alphabet().size());

  // Key: first entry is the state on first reaching the cell right of the prefix
  // (or kAcc); the rest is the re-entry table. Rejecting keys are never stored.
  using Key = std::vector<int>;
  auto collapse = [](Key k) { return k[0] == kAcc ? Key{kAcc} : k; };

  Key start(n + 1);
  start[0] = a.initial() == a.accept() ? kAcc : a.initial();
  for (StateId p = 0; p < n; ++p) {
    auto m = a.transition_at(p, boundary);
    if (p == a.accept()) {
      start[p + 1] = kAcc;
    } else if (!m) {
      start[p + 1] = kRej;
    } else if (m->to == a.accept()) {
      start[p + 1] = kAcc;
    } else {
      start[p + 1] = m->dir == Direction::R ? m->to : kRej;
    }
  }
  start = collapse(start);

  Automaton1D out(a.name() + "_1w", Kind1D::OneWay, a.alphabet());
  std::map<Key, StateId> ids;
  std::deque<Key> pending;
  auto id = [&](const Key& k) {
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    StateId q = out.add_state("c" + std::to_string(ids.size()));
    ids.emplace(k, q);
    pending.push_back(k);
    return q;
  };
  out.set_initial(id(start));

  while (!pending.empty()) {
    Key k = pending.front();
    pending.pop_front();
    StateId q = ids.at(k);
    if (k[0] == kAcc) {
      out.add_accepting(q);
      for (char c : a.alphabet()) out.set_transition(q, c, q);
      continue;
    }
    std::vector<int> table(k.begin() + 1, k.end());
    if (settle(a, boundary, k[0], table) == kAcc) out.add_accepting(q);
    for (int s = 0; s < boundary; ++s) {
      Key next(n + 1);
      next[0] = settle(a, s, k[0], table);
      if (next[0] == kRej) continue;
      if (next[0] != kAcc)
        for (StateId p = 0; p < n; ++p) next[p + 1] = settle(a, s, p, table);
      out.set_transition(q, a.alphabet()[s], id(collapse(next)));
    }
  }
  return out;
}

// ---- three-way rows ----

namespace {

void require_det_3w(const Automaton2D& m, std::string_view op) {
  if (m.variant() != Variant::ThreeWay)
    throw UnsupportedVariant(std::string(op) + " needs a three-way automaton");
  if (!m.deterministic()) throw ModeError(std::string(op) + " needs a deterministic automaton");
  if (m.initial() < 0 || m.accept() < 0)
    throw InputError("automaton '" + m.name() + "' lacks an initial or accepting state");
}

}  // namespace

std::vector<Departure> downward_departures(const Automaton2D& m, const Picture& w, int row) {
  require_det_3w(m, "downward_departures");
  if (row < 1 || row > w.rows()) throw RangeError("row " + std::to_string(row) + " outside the picture");
  for (int c = 2; c <= w.cols(); ++c)
    if (w(row, c) != w(row, 1)) throw InputError("row " + std::to_string(row) + " is not uniform");

  auto run = run_deterministic(m, w.view());
  const auto& steps = run.trace.steps;
  std::vector<Departure> out;
  std::optional<Departure> open;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    bool here = s.location && s.location->row == row;
    if (here) {
      if (!open) open = Departure{-1, false, false, s.state, s.location->col};
      open->visited_first |= s.location->col == 1;
      open->visited_last |= s.location->col == w.cols();
      if (i + 1 < steps.size()) {
        const auto& n = steps[i + 1];
        if (n.location && n.location->row == row + 1) {
          open->column = s.location->col;
          out.push_back(*open);
          open.reset();
        }
      }
    }
  }
  return out;
}

Sojourn uniform_row_sojourn(const Automaton2D& m, char symbol, int width, StateId q, int column) {
  require_det_3w(m, "uniform_row_sojourn");
  if (width < 1) throw RangeError("row width must be at least 1");
  if (column < 0 || column > width + 1) throw RangeError("entry column outside the row band");
  const int sym = m.symbol_index(symbol);
  if (sym < 0) throw InputError(std::string("symbol '") + symbol + "' not in the automaton's alphabet");
  const int cells = width + 2;
  std::vector<char> seen(std::size_t(m.num_states()) * cells, 0);
  Sojourn out;
  int c = column;
  while (q != m.accept()) {
    char& mark = seen[std::size_t(q) * cells + c];
    if (mark) break;
    mark = 1;
    out.visited_first |= c == 1;
    out.visited_last |= c == width;
    auto images = m.moves_at(q, c == 0 || c == width + 1 ? m.boundary_index() : sym);
    if (images.empty()) break;
    const Move& mv = images.front();
    if (mv.dir == Direction::D) {
      out.departure = c;
      break;
    }
    int next = c + (mv.dir == Direction::L ? -1 : 1);
    if (next < 0 || next > width + 1) break;
    q = mv.to;
    c = next;
  }
  return out;
}

bool within_lemma2_bound(int column, int width, int states) noexcept {
  return std::min(column, width - column + 1) <= states + 1;
}

Lemma2Report lemma2_check(const Automaton2D& m, int max_width, char symbol) {
  require_det_3w(m, "lemma2_check");
  Lemma2Report report;
  for (int w = 1; w <= max_width; ++w) {
    for (StateId q = 0; q < m.num_states(); ++q) {
      for (int c = 0; c <= w + 1; ++c) {
        ++report.sojourns;
        auto s = uniform_row_sojourn(m, symbol, w, q, c);
        if (!s.departure || !(s.visited_first || s.visited_last)) continue;
        ++report.qualifying;
        if (!within_lemma2_bound(*s.departure, w, m.num_states()))
          report.violations.push_back({q, c, w, *s.departure});
      }
    }
  }
  return report;
}

std::string_view to_string(Side s) noexcept { return s == Side::Left ? "left" : "right"; }

std::optional<Side> parse_side(std::string_view s) noexcept {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  return std::nullopt;
}

Automaton1D row_restriction(const Automaton2D& m, StateId entry, Side side, int offset) {
  require_det_3w(m, "row_restriction");
  const int n = m.num_states();
  if (entry < 0 || entry >= n) throw InputError("entry state out of range");
  if (offset < 0 || offset > n + 1)
    throw PreconditionError("offset " + std::to_string(offset) + " outside 0.." + std::to_string(n + 1));

  Automaton1D N(m.name() + "_row_" + m.state_name(entry) + "_" + std::string(to_string(side)) + "_" +
                    std::to_string(offset),
                Kind1D::TwoWay, m.alphabet());
  std::vector<StateId> copy(n);
  for (StateId q = 0; q < n; ++q) copy[q] = N.add_state("m:" + m.state_name(q));
  const StateId acc = N.add_state("accept");
  N.set_accept(acc);

  std::string symbols = m.alphabet().symbols() + kBoundary;
  // M's moves inside the row; a downward move is acceptance.
  auto simulate = [&](StateId from, StateId q, char c) {
    auto images = m.moves(q, c);
    if (images.empty()) return;
    const Move& mv = images.front();
    if (mv.dir == Direction::D)
      N.set_transition(from, c, acc, Direction::R);
    else
      N.set_transition(from, c, copy[mv.to], mv.dir);
  };
  for (StateId q = 0; q < n; ++q) {
    if (q == m.accept()) continue;
    for (char c : symbols) simulate(copy[q], q, c);
  }

  if (side == Side::Left) {
    if (offset == 0) {
      StateId step = N.add_state("left");
      for (char c : symbols) N.set_transition(step, c, copy[entry], Direction::L);
      N.set_initial(step);
    } else {
      // count[k]: k more moves right before entering.
      StateId next = copy[entry];
      for (int k = 1; k < offset; ++k) {
        StateId s = N.add_state("right" + std::to_string(k));
        for (char c : m.alphabet()) N.set_transition(s, c, next, Direction::R);
        next = s;
      }
      N.set_initial(next);
    }
  } else {
    StateId seek = N.add_state("seek");
    N.set_initial(seek);
    for (char c : m.alphabet()) N.set_transition(seek, c, seek, Direction::R);
    if (offset == 0) {
      if (entry != m.accept()) simulate(seek, entry, kBoundary);
    } else {
      StateId next = copy[entry];
      for (int k = 1; k < offset; ++k) {
        StateId s = N.add_state("back" + std::to_string(k));
        for (char c : symbols) N.set_transition(s, c, next, Direction::L);
        next = s;
      }
      N.set_transition(seek, kBoundary, next, Direction::L);
    }
  }
  return N;
}

// ---- state bound ----

BoundValue kapoutsis_bound(unsigned n) {
  if (n == 0) throw RangeError("h(n) is defined for n >= 1");
  BigInt b = n;
  BigInt h = b * (boost::multiprecision::pow(b, n) - boost::multiprecision::pow(b - 1, n));
  return {n, h};
}

BigInt separation_k(unsigned n) { return kapoutsis_bound(2 * n + 3).h + 1; }

}  // namespace pica
