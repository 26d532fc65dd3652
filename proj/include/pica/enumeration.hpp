#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pica/automaton.hpp"
#include "pica/picture.hpp"
#include "pica/simulation.hpp"
#include "pica/word_ops.hpp"

namespace pica {

struct DimBounds {
  int max_rows = 1;
  int max_cols = 1;
};

inline constexpr std::size_t kDefaultBudget = 10'000'000;

using PicturePredicate = std::function<bool(PictureView)>;

/// A picture on which a candidate automaton and a target language disagree.
struct Counterexample {
  Picture word;
  bool expected;  ///< target verdict
  bool got;       ///< candidate verdict
  std::optional<RunTrace> evidence;
  std::string method;  ///< "exhaustive", "flip-accept" or "flip-reject"
};

/// How `equivalent_up_to` covers the bounded picture space.
///
/// `Exhaustive` simulates every picture. `DecisionTree` assigns cells only when
/// the candidate or the target reads them, so every leaf stands for the whole
/// set of pictures agreeing on the cells read; its coverage is still complete.
enum class Strategy { Exhaustive, DecisionTree };

struct EnumOptions {
  /// Maximum number of pictures (Exhaustive) or tree nodes (DecisionTree).
  std::size_t budget = kDefaultBudget;
  Strategy strategy = Strategy::Exhaustive;
};

/// Number of pictures over `alphabet` within bounds, saturating at SIZE_MAX.
std::size_t count_pictures(const Alphabet& alphabet, DimBounds b);

/// Visits every picture within bounds in enumeration order: ascending rows, then
/// columns, then cells lexicographically (row-major, alphabet order). `visit`
/// returns false to stop early. Throws CapacityError if the count exceeds `budget`.
void for_each_picture(const Alphabet& alphabet, DimBounds b, std::size_t budget,
                      const std::function<bool(const Picture&)>& visit);

/// Strict enumeration order on pictures over `alphabet`.
bool enumeration_less(const Alphabet& alphabet, const Picture& x, const Picture& y);

/// The pictures within bounds accepted by `a`, in enumeration order.
std::vector<Picture> language_up_to(const Automaton2D& a, DimBounds b,
                                    std::size_t budget = kDefaultBudget);

/// First picture (enumeration order) where `candidate` and `target` disagree.
std::optional<Counterexample> equivalent_up_to(const Automaton2D& candidate,
                                               const PicturePredicate& target, DimBounds b,
                                               EnumOptions options = {});

/// First picture of `domain` (in the given order) where the verdicts disagree.
std::optional<Counterexample> equivalent_on(const Automaton2D& candidate,
                                            const PicturePredicate& target,
                                            const std::vector<Picture>& domain);

/// Every allow-hash picture within bounds with exactly one full '#' row and one full
/// '#' column, both strictly inside, and alphabet symbols elsewhere.
std::vector<Picture> separated_layouts(const Alphabet& alphabet, DimBounds b,
                                       std::size_t budget = kDefaultBudget);

/// Accept-side replay attack. For each accepting trace of `candidate` on `w`, flips an
/// unvisited cell to every other symbol; the trace stays valid on the flipped word,
/// so a flipped word outside `target` is a counterexample. Throws PreconditionError
/// if `candidate` rejects `w`.
std::optional<Counterexample> flip_attack(const Automaton2D& candidate, const Picture& w,
                                          const PicturePredicate& target,
                                          std::size_t trace_limit = 64);

/// Reject-side variant for deterministic candidates: the unique rejecting run is
/// unchanged by flipping an unvisited cell, so a flipped word inside `target` is a
/// counterexample. Throws ModeError (nondeterministic) or PreconditionError (accepted).
std::optional<Counterexample> flip_attack_rejecting(const Automaton2D& candidate,
                                                    const Picture& w,
                                                    const PicturePredicate& target);

struct RefuteOptions {
  bool exhaustive = true;
  bool flips = true;
  std::size_t budget = kDefaultBudget;
};

/// Searches for a counterexample to "candidate recognizes L(a) kind L(b)":
/// exhaustive comparison against `concat_membership`, then accept-side flips seeded
/// at every accepted picture, then (deterministic candidates) reject-side flips.
std::optional<Counterexample> refute(const Automaton2D& candidate, ConcatKind kind,
                                     const Automaton2D& a, const Automaton2D& b, DimBounds bounds,
                                     RefuteOptions options = {});

}  // namespace pica
