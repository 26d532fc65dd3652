#include "pica/automaton.hpp"

#include <algorithm>

#include "pica/error.hpp"
#include "text_util.hpp"

namespace pica {

char to_char(Direction d) noexcept {
  switch (d) {
    case Direction::U: return 'U';
    case Direction::D: return 'D';
    case Direction::L: return 'L';
    case Direction::R: return 'R';
  }
  return '?';
}

std::optional<Direction> parse_direction(std::string_view s) noexcept {
  if (s == "U") return Direction::U;
  if (s == "D") return Direction::D;
  if (s == "L") return Direction::L;
  if (s == "R") return Direction::R;
  return std::nullopt;
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::FourWay: return "4W";
    case Variant::ThreeWay: return "3W";
    case Variant::TwoWay: return "2W";
  }
  return "?";
}

std::string_view to_string(Mode m) noexcept {
  return m == Mode::Deterministic ? "det" : "nondet";
}

Automaton2D::Automaton2D(std::string name, Variant variant, Mode mode, Alphabet alphabet)
    : name_(std::move(name)), variant_(variant), mode_(mode), alphabet_(std::move(alphabet)) {
  sym_index_.fill(-1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    sym_index_[static_cast<unsigned char>(alphabet_[i])] = static_cast<std::int16_t>(i);
  sym_index_[static_cast<unsigned char>(kBoundary)] = static_cast<std::int16_t>(alphabet_.size());
}

std::optional<StateId> Automaton2D::find_state(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

StateId Automaton2D::state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw InputError("unknown state '" + std::string(name) + "'");
}

StateId Automaton2D::add_state(std::string name) {
  if (name.empty()) throw InputError("empty state name");
  if (ids_.count(name)) throw InputError("duplicate state '" + name + "'");
  StateId id = num_states();
  ids_.emplace(name, id);
  state_names_.push_back(std::move(name));
  delta_.resize(delta_.size() + width());
  return id;
}

StateId Automaton2D::ensure_state(const std::string& name) {
  if (auto q = find_state(name)) return *q;
  return add_state(name);
}

void Automaton2D::set_initial(StateId q) {
  if (q < 0 || q >= num_states()) throw InputError("initial state out of range");
  initial_ = q;
}

void Automaton2D::set_accept(StateId q) {
  if (q < 0 || q >= num_states()) throw InputError("accept state out of range");
  accept_ = q;
}

std::size_t Automaton2D::slot(StateId q, char symbol) const {
  if (q < 0 || q >= num_states()) throw InputError("state id out of range");
  int s = symbol_index(symbol);
  if (s < 0) throw InputError(std::string("symbol '") + symbol + "' not in alphabet");
  return std::size_t(q) * width() + s;
}

void Automaton2D::add_transition(StateId from, char symbol, StateId to, Direction dir) {
  if (to < 0 || to >= num_states()) throw InputError("target state out of range");
  auto& images = delta_[slot(from, symbol)];
  Move m{to, dir};
  auto it = std::lower_bound(images.begin(), images.end(), m);
  if (it == images.end() || *it != m) images.insert(it, m);
}

void Automaton2D::clear_transitions(StateId from, char symbol) { delta_[slot(from, symbol)].clear(); }

std::span<const Move> Automaton2D::moves(StateId q, char symbol) const {
  return delta_[slot(q, symbol)];
}

std::size_t Automaton2D::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& v : delta_) n += v.size();
  return n;
}

bool Automaton2D::operator==(const Automaton2D& o) const {
  return name_ == o.name_ && variant_ == o.variant_ && mode_ == o.mode_ &&
         alphabet_ == o.alphabet_ && state_names_ == o.state_names_ && initial_ == o.initial_ &&
         accept_ == o.accept_ && delta_ == o.delta_;
}

std::vector<Violation> validate(const Automaton2D& a) {
  std::vector<Violation> out;
  if (a.initial() < 0) out.push_back({"missing initial state", "no initial state declared"});
  if (a.accept() < 0) out.push_back({"missing accept state", "no accepting state declared"});
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (int s = 0; s <= a.boundary_index(); ++s) {
      auto images = a.moves_at(q, s);
      if (images.empty()) continue;
      std::string where = a.state_name(q) + " '" + a.symbol_at(s) + "'";
      if (q == a.accept())
        out.push_back({"transition from accepting state", where});
      for (const auto& m : images) {
        if (!is_legal(a.variant(), m.dir))
          out.push_back({"illegal direction for variant",
                         where + " -> " + a.state_name(m.to) + " " + to_char(m.dir) + " in " +
                             std::string(to_string(a.variant()))});
      }
      if (a.deterministic() && images.size() > 1)
        out.push_back({"nondeterministic fan-out in det mode",
                       where + " has " + std::to_string(images.size()) + " images"});
    }
  }
  return out;
}

namespace {

Direction transposed(Direction d) {
  switch (d) {
    case Direction::U: return Direction::L;
    case Direction::L: return Direction::U;
    case Direction::D: return Direction::R;
    case Direction::R: return Direction::D;
  }
  return d;
}

}  // namespace

Automaton2D transpose_automaton(const Automaton2D& a) {
  if (a.variant() == Variant::ThreeWay)
    throw UnsupportedVariant("transpose of a three-way automaton has no three-way equivalent");
  Automaton2D t = a;
  for (auto& images : t.delta_) {
    for (auto& m : images) m.dir = transposed(m.dir);
    std::sort(images.begin(), images.end());
  }
  return t;
}

namespace {

Variant parse_variant(const detail::Line& l, const std::string& s) {
  if (s == "4W") return Variant::FourWay;
  if (s == "3W") return Variant::ThreeWay;
  if (s == "2W") return Variant::TwoWay;
  throw ParseError(l.number, "unknown variant '" + s + "'");
}

Mode parse_mode(const detail::Line& l, const std::string& s) {
  if (s == "det") return Mode::Deterministic;
  if (s == "nondet") return Mode::Nondeterministic;
  throw ParseError(l.number, "unknown mode '" + s + "'");
}

char parse_symbol_token(const detail::Line& l, const std::string& s) {
  if (s.size() != 1) throw ParseError(l.number, "symbols are single characters: '" + s + "'");
  return s[0];
}

}  // namespace

Automaton2D parse_automaton(std::string_view text) {
  auto lines = detail::tokenized_lines(text);
  if (lines.empty()) throw ParseError(0, "empty automaton file");

  const auto& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "automaton")
    throw ParseError(head.number, "expected 'automaton <name>'");

  std::optional<Variant> variant;
  std::optional<Mode> mode;
  std::optional<std::string> alphabet;
  std::vector<std::string> states;
  std::optional<std::string> initial, accept;
  std::vector<const detail::Line*> transitions;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto& t = l.tokens;
    const auto& key = t[0];
    if (key == "variant" && t.size() == 2) {
      variant = parse_variant(l, t[1]);
    } else if (key == "mode" && t.size() == 2) {
      mode = parse_mode(l, t[1]);
    } else if (key == "alphabet") {
      std::string syms;
      for (std::size_t k = 1; k < t.size(); ++k) syms.push_back(parse_symbol_token(l, t[k]));
      alphabet = syms;
    } else if (key == "states") {
      states.assign(t.begin() + 1, t.end());
    } else if (key == "initial" && t.size() == 2) {
      initial = t[1];
    } else if (key == "accept" && t.size() == 2) {
      accept = t[1];
    } else if (t.size() == 5 && t[2] == "->") {
      transitions.push_back(&l);
    } else {
      throw ParseError(l.number, "unrecognized line");
    }
  }
  if (!variant) throw ParseError(head.number, "missing 'variant'");
  if (!mode) throw ParseError(head.number, "missing 'mode'");
  if (!alphabet) throw ParseError(head.number, "missing 'alphabet'");
  if (states.empty()) throw ParseError(head.number, "missing 'states'");
  if (!initial) throw ParseError(head.number, "missing 'initial'");
  if (!accept) throw ParseError(head.number, "missing 'accept'");

  Automaton2D a = [&] {
    try {
      return Automaton2D(head.tokens[1], *variant, *mode, Alphabet(*alphabet));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(head.number, e.what());
    }
  }();
  for (const auto& s : states) {
    if (a.find_state(s)) throw ParseError(head.number, "duplicate state '" + s + "'");
    a.add_state(s);
  }
  auto lookup = [&](const detail::Line& l, const std::string& s) {
    if (auto q = a.find_state(s)) return *q;
    throw ParseError(l.number, "unknown state '" + s + "'");
  };
  a.set_initial(lookup(head, *initial));
  a.set_accept(lookup(head, *accept));
  for (const auto* l : transitions) {
    const auto& t = l->tokens;
    char sym = parse_symbol_token(*l, t[1]);
    if (a.symbol_index(sym) < 0)
      throw ParseError(l->number, std::string("symbol '") + sym + "' not in alphabet");
    auto dir = parse_direction(t[4]);
    if (!dir) throw ParseError(l->number, "unknown direction '" + t[4] + "'");
    a.add_transition(lookup(*l, t[0]), sym, lookup(*l, t[3]), *dir);
  }
  return a;
}

Automaton2D read_automaton_file(const std::filesystem::path& path) {
  return parse_automaton(read_text_file(path));
}

std::string format_automaton(const Automaton2D& a) {
  std::string out;
  out += "automaton " + a.name() + "\n";
  out += "variant " + std::string(to_string(a.variant())) + "\n";
  out += "mode " + std::string(to_string(a.mode())) + "\n";
  out += "alphabet";
  for (char c : a.alphabet()) {
    out += ' ';
    out += c;
  }
  out += "\nstates " + detail::join(a.state_names(), " ") + "\n";
  out += "initial " + a.state_name(a.initial()) + "\n";
  out += "accept " + a.state_name(a.accept()) + "\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (int s = 0; s <= a.boundary_index(); ++s) {
      for (const auto& m : a.moves_at(q, s)) {
        out += a.state_name(q);
        out += ' ';
        out += a.symbol_at(s);
        out += " -> " + a.state_name(m.to) + ' ' + to_char(m.dir) + '\n';
      }
    }
  }
  return out;
}

}  // namespace pica
