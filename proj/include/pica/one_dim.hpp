#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"

namespace pica {

enum class Kind1D : std::uint8_t { TwoWay, OneWay };

std::string_view to_string(Kind1D k) noexcept;

/// Deterministic one-dimensional automaton.
///
/// Two-way: input framed as # s #, head starts on s's first symbol (on the right
/// '#' for the empty string), moves L or R, single accepting state entered anywhere.
/// One-way: reads left to right, accepts iff the final state is accepting; no '#'.
class Automaton1D {
 public:
  Automaton1D(std::string name, Kind1D kind, Alphabet alphabet);

  const std::string& name() const noexcept { return name_; }
  Kind1D kind() const noexcept { return kind_; }
  bool two_way() const noexcept { return kind_ == Kind1D::TwoWay; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  int num_states() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& state_name(StateId q) const { return names_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;
  StateId state(std::string_view name) const;
  StateId add_state(std::string name);

  StateId initial() const noexcept { return initial_; }
  void set_initial(StateId q);

  /// Two-way: the accepting state. One-way: -1.
  StateId accept() const noexcept { return accept_; }
  void set_accept(StateId q);
  /// One-way only.
  void add_accepting(StateId q);
  bool accepting(StateId q) const { return accepting_.at(q) != 0; }

  /// Defines delta(q, symbol). Throws InputError if already defined. One-way
  /// machines ignore `dir` and reject '#'.
  void set_transition(StateId q, char symbol, StateId to, Direction dir = Direction::R);
  std::optional<Move> transition(StateId q, char symbol) const;
  std::optional<Move> transition_at(StateId q, int sym_index) const {
    return delta_[std::size_t(q) * width() + sym_index];
  }
  int symbol_index(char c) const noexcept;

  bool operator==(const Automaton1D& o) const = default;

 private:
  std::size_t width() const noexcept { return alphabet_.size() + 1; }

  std::string name_;
  Kind1D kind_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> ids_;
  StateId initial_ = -1;
  StateId accept_ = -1;
  std::vector<char> accepting_;
  std::vector<std::optional<Move>> delta_;
};

/// Violations: missing initial/accept, moves other than L/R, transitions from the
/// two-way accepting state.
std::vector<Violation> validate(const Automaton1D& a);

// Same layout as the 2D format with `variant 1D-2W|1D-1W`, `mode det`, direction
// L|R on two-way transition lines and none on one-way lines. One-way `accept`
// lists every accepting state.
Automaton1D parse_automaton_1d(std::string_view text);
Automaton1D read_automaton_1d_file(const std::filesystem::path& path);
std::string format_automaton(const Automaton1D& a);

/// Two-way: true iff the accepting state is entered (even by a move that leaves the
/// tape); falling off the tape, an undefined move or a repeated configuration rejects.
/// One-way: the usual run. Throws InputError for symbols outside the alphabet.
bool simulate_1d(const Automaton1D& a, std::string_view s);

/// Equivalent one-way machine, built from crossing tables: each state records where
/// the two-way run first crosses to the right of the prefix read so far and, for
/// every state in which it could come back into the prefix, where it would leave again.
Automaton1D two_way_to_one_way(const Automaton1D& a);

// ---- three-way rows ----

/// One move from row i to row i+1 of a deterministic 3W run.
struct Departure {
  int column;          ///< column of the D move (0 and cols+1 are the frame)
  bool visited_first;  ///< column 1 seen during the sojourn in row i
  bool visited_last;   ///< column cols seen during the sojourn in row i
  StateId entry_state;
  int entry_column;
};

/// Replays the run of a det 3W machine on `w` and reports its departure from row `row`
/// (at most one). Throws ModeError, UnsupportedVariant, RangeError for a bad row, or
/// InputError if the row is not uniform.
std::vector<Departure> downward_departures(const Automaton2D& m, const Picture& w, int row);

/// Run of a det 3W machine confined to a row of `width` copies of `symbol`, entered at
/// `column` in state `q`. `departure` is the column of the first D move, if any.
struct Sojourn {
  std::optional<int> departure;
  bool visited_first = false;
  bool visited_last = false;
};
Sojourn uniform_row_sojourn(const Automaton2D& m, char symbol, int width, StateId q, int column);

/// min(c, width - c + 1) <= n + 1 for departures that visited an end of the row.
bool within_lemma2_bound(int column, int width, int states) noexcept;

struct Lemma2Violation {
  StateId entry_state;
  int entry_column;
  int width;
  int departure;
};

struct Lemma2Report {
  std::size_t sojourns = 0;    ///< entry configurations examined
  std::size_t qualifying = 0;  ///< departures after visiting an end of the row
  std::vector<Lemma2Violation> violations;
};

/// Checks the bound for every entry state and entry column on uniform rows of width
/// 1..max_width. A row's sojourn depends only on its entry configuration, so this
/// covers every picture whose row i is uniform.
Lemma2Report lemma2_check(const Automaton2D& m, int max_width, char symbol = '0');

enum class Side : std::uint8_t { Left, Right };

std::string_view to_string(Side s) noexcept;
std::optional<Side> parse_side(std::string_view s) noexcept;

/// Two-way 1D machine accepting a row string r iff the det 3W machine `m`, entering a
/// row with contents r in `entry` at column d (Left) or |r|+1-d (Right), eventually
/// moves down. At most 2n+3 states. Throws PreconditionError if d > n+1 or d < 0.
Automaton1D row_restriction(const Automaton2D& m, StateId entry, Side side, int offset);

// ---- state bound ----

using BigInt = boost::multiprecision::cpp_int;

struct BoundValue {
  unsigned n;
  BigInt h;
};

/// h(n) = n (n^n - (n-1)^n). Throws RangeError for n = 0.
BoundValue kapoutsis_bound(unsigned n);

/// h(2n + 3) + 1, the thm9-X(k) width used against an n-state det 3W machine.
BigInt separation_k(unsigned n);

}  // namespace pica
