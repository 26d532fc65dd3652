#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pica/picture.hpp"

namespace pica {

enum class Direction : std::uint8_t { U, D, L, R };
enum class Variant : std::uint8_t { FourWay, ThreeWay, TwoWay };
enum class Mode : std::uint8_t { Deterministic, Nondeterministic };

using StateId = int;

/// 4W allows every direction, 3W forbids U, 2W allows only D and R.
constexpr bool is_legal(Variant v, Direction d) noexcept {
  switch (v) {
    case Variant::FourWay: return true;
    case Variant::ThreeWay: return d != Direction::U;
    case Variant::TwoWay: return d == Direction::D || d == Direction::R;
  }
  return false;
}

char to_char(Direction d) noexcept;
std::optional<Direction> parse_direction(std::string_view s) noexcept;
std::string_view to_string(Variant v) noexcept;
std::string_view to_string(Mode m) noexcept;

struct Move {
  StateId to;
  Direction dir;
  auto operator<=>(const Move&) const = default;
};

/// Two-dimensional automaton with a single accepting state and a partial
/// transition relation. Missing entries halt and reject.
///
/// States are opaque string identifiers mapped to dense ids in insertion order.
/// Transitions on '#' are stored alongside alphabet symbols; `symbol_index('#')`
/// is `alphabet().size()`.
class Automaton2D {
 public:
  Automaton2D(std::string name, Variant variant, Mode mode, Alphabet alphabet);

  const std::string& name() const noexcept { return name_; }
  Variant variant() const noexcept { return variant_; }
  Mode mode() const noexcept { return mode_; }
  bool deterministic() const noexcept { return mode_ == Mode::Deterministic; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  void set_name(std::string name) { name_ = std::move(name); }
  void set_mode(Mode m) noexcept { mode_ = m; }

  int num_states() const noexcept { return static_cast<int>(state_names_.size()); }
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws InputError for an unknown name.
  StateId state(std::string_view name) const;

  /// Adds a state; throws InputError on a duplicate name.
  StateId add_state(std::string name);
  /// Returns the existing id for `name`, adding the state if needed.
  StateId ensure_state(const std::string& name);

  StateId initial() const noexcept { return initial_; }
  StateId accept() const noexcept { return accept_; }
  void set_initial(StateId q);
  void set_accept(StateId q);

  /// Adds (to, dir) to delta(from, symbol). Duplicate images are ignored.
  void add_transition(StateId from, char symbol, StateId to, Direction dir);
  void clear_transitions(StateId from, char symbol);

  int symbol_index(char c) const noexcept { return sym_index_[static_cast<unsigned char>(c)]; }
  int boundary_index() const noexcept { return static_cast<int>(alphabet_.size()); }
  /// Symbol for an index in [0, alphabet().size()]; the last index is '#'.
  char symbol_at(int index) const noexcept {
    return index == boundary_index() ? kBoundary : alphabet_[index];
  }

  std::span<const Move> moves(StateId q, char symbol) const;
  std::span<const Move> moves_at(StateId q, int sym_index) const noexcept {
    return delta_[std::size_t(q) * width() + sym_index];
  }

  std::size_t transition_count() const noexcept;

  /// Structural equality: name, variant, mode, alphabet, state order, initial, accept, delta.
  bool operator==(const Automaton2D& o) const;

 private:
  friend Automaton2D transpose_automaton(const Automaton2D& a);

  std::size_t width() const noexcept { return alphabet_.size() + 1; }
  std::size_t slot(StateId q, char symbol) const;

  std::string name_;
  Variant variant_;
  Mode mode_;
  Alphabet alphabet_;
  std::array<std::int16_t, 256> sym_index_{};
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, StateId> ids_;
  StateId initial_ = -1;
  StateId accept_ = -1;
  std::vector<std::vector<Move>> delta_;
};

struct Violation {
  std::string kind;
  std::string detail;
};

/// Every violated well-formedness condition; empty iff the automaton is valid
/// for its declared variant and mode.
std::vector<Violation> validate(const Automaton2D& a);

/// Swaps D<->R and U<->L in every transition. Defined for 2W and 4W only.
Automaton2D transpose_automaton(const Automaton2D& a);

// Line-oriented text format:
//   automaton <name>
//   variant 4W|3W|2W
//   mode det|nondet
//   alphabet <sym> ...
//   states <id> ...
//   initial <id>
//   accept <id>
//   <state> <sym|#> -> <state> <U|D|L|R>
// ';' (at line start or after whitespace) begins a comment.
Automaton2D parse_automaton(std::string_view text);
Automaton2D read_automaton_file(const std::filesystem::path& path);
std::string format_automaton(const Automaton2D& a);

}  // namespace pica
