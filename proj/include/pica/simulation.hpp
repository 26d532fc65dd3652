#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"

namespace pica {

/// State plus head location. An empty location is the escape sink: a 2W/3W head
/// that has permanently left the extended band and reads only '#'.
struct Configuration {
  StateId state = 0;
  std::optional<Position> location;

  bool escaped() const noexcept { return !location.has_value(); }
  auto operator<=>(const Configuration&) const = default;
};

/// Sequence of configurations starting at (initial, (1,1)) on a rows x cols input.
struct RunTrace {
  int rows = 0;
  int cols = 0;
  std::vector<Configuration> steps;

  bool operator==(const RunTrace&) const = default;
};

enum class RunOutcome { Accepted, RejectedUndefined, RejectedLoop };

struct RunResult {
  RunOutcome outcome;
  RunTrace trace;
  bool accepted() const noexcept { return outcome == RunOutcome::Accepted; }
};

/// One-step successors of `c`.
///
/// A move leaving the extended band enters the escape sink for 2W (any exit) and
/// for 3W when it exits below the frame; 3W horizontal exits and all 4W exits
/// are dropped, i.e. treated as undefined.
std::vector<Configuration> successors(const Automaton2D& a, PictureView w, const Configuration& c);

/// True iff a configuration in the accepting state is reachable from (initial, (1,1)).
/// Reads cells lazily; a cell symbol outside the alphabet raises InputError when read.
bool accepts(const Automaton2D& a, PictureView w);
/// Same, but checks every cell against the alphabet first.
bool accepts(const Automaton2D& a, const Picture& w);

/// Follows the unique run of a deterministic automaton, stopping at the first
/// repeated configuration. Throws ModeError for nondeterministic automata.
RunResult run_deterministic(const Automaton2D& a, PictureView w);

/// Up to `limit` accepting traces without repeated configurations, found by
/// depth-first search restricted to configurations that can still reach acceptance.
std::vector<RunTrace> accepting_runs(const Automaton2D& a, PictureView w, std::size_t limit);

/// In-bounds positions occurring in the trace.
std::set<Position> visited_cells(const RunTrace& t);

/// One line per configuration: `<state> @ (<row>,<col>) reads '<sym>'` or
/// `<state> @ ESC reads '#'`.
std::string format_trace(const Automaton2D& a, PictureView w, const RunTrace& t);

/// Throws InputError if some cell of `w` is neither in `alphabet` nor an allowed '#'.
void check_alphabet(const Alphabet& alphabet, const Picture& w);

}  // namespace pica
