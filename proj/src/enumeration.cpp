#include "pica/enumeration.hpp"

#include <limits>

#include "pica/error.hpp"

namespace pica {

namespace {

constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kMax - b ? kMax : a + b; }

std::size_t sat_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp && r != kMax; ++i) r = sat_mul(r, base);
  return r;
}

void check_bounds(DimBounds b) {
  if (b.max_rows < 1 || b.max_cols < 1) throw RangeError("dimension bounds must be at least 1");
}

std::optional<RunTrace> evidence_for(const Automaton2D& a, const Picture& w, bool accepted) {
  if (accepted) {
    auto runs = accepting_runs(a, w.view(), 1);
    if (!runs.empty()) return runs.front();
    return std::nullopt;
  }
  if (a.deterministic()) return run_deterministic(a, w.view()).trace;
  return std::nullopt;
}

Counterexample make_counterexample(const Automaton2D& a, Picture w, bool expected, bool got,
                                   std::string method) {
  auto evidence = evidence_for(a, w, got);
  return {std::move(w), expected, got, std::move(evidence), std::move(method)};
}

/// Decision-tree search over one m x n shape.
///
/// Cells start unassigned. Whenever the candidate or the target reads an unassigned
/// cell the search branches on it; a leaf fixes both verdicts for every completion
/// of the cells assigned so far. Among disagreeing leaves the smallest completion
/// (free cells set to the first symbol) is kept.
class DecisionTree {
 public:
  DecisionTree(const Automaton2D& candidate, const PicturePredicate& target, int rows, int cols,
               std::size_t& nodes, std::size_t budget)
      : candidate_(candidate), target_(target), rows_(rows), cols_(cols),
        cells_(std::size_t(rows) * cols, kUnassigned), nodes_(nodes), budget_(budget) {}

  std::optional<Picture> run() {
    explore(std::nullopt, std::nullopt);
    return best_;
  }

 private:
  void explore(std::optional<bool> cand, std::optional<bool> targ) {
    if (++nodes_ > budget_) throw CapacityError("decision-tree enumeration exceeded its node budget");
    PictureView view(cells_.data(), rows_, cols_, false);
    try {
      if (!cand) cand = accepts(candidate_, view);
    } catch (const UnassignedCell& u) {
      branch(u.cell, std::nullopt, targ);
      return;
    }
    try {
      if (!targ) targ = target_(view);
    } catch (const UnassignedCell& u) {
      branch(u.cell, cand, std::nullopt);
      return;
    }
    if (*cand == *targ) return;
    std::string filled = cells_;
    for (char& c : filled)
      if (c == kUnassigned) c = candidate_.alphabet()[0];
    Picture w(rows_, cols_, std::move(filled));
    if (!best_ || enumeration_less(candidate_.alphabet(), w, *best_)) best_ = std::move(w);
  }

  void branch(Position p, std::optional<bool> cand, std::optional<bool> targ) {
    char& cell = cells_[std::size_t(p.row - 1) * cols_ + (p.col - 1)];
    for (char s : candidate_.alphabet()) {
      cell = s;
      explore(cand, targ);
    }
    cell = kUnassigned;
  }

  const Automaton2D& candidate_;
  const PicturePredicate& target_;
  int rows_;
  int cols_;
  std::string cells_;
  std::size_t& nodes_;
  std::size_t budget_;
  std::optional<Picture> best_;
};

}  // namespace

std::size_t count_pictures(const Alphabet& alphabet, DimBounds b) {
  check_bounds(b);
  std::size_t total = 0;
  for (int m = 1; m <= b.max_rows; ++m)
    for (int n = 1; n <= b.max_cols; ++n)
      total = sat_add(total, sat_pow(alphabet.size(), std::size_t(m) * n));
  return total;
}

void for_each_picture(const Alphabet& alphabet, DimBounds b, std::size_t budget,
                      const std::function<bool(const Picture&)>& visit) {
  std::size_t total = count_pictures(alphabet, b);
  if (total > budget)
    throw CapacityError("enumeration of " + (total == kMax ? std::string("too many") : std::to_string(total)) +
                        " pictures exceeds the budget of " + std::to_string(budget));
  const std::size_t k = alphabet.size();
  for (int m = 1; m <= b.max_rows; ++m) {
    for (int n = 1; n <= b.max_cols; ++n) {
      const std::size_t len = std::size_t(m) * n;
      std::vector<std::size_t> digits(len, 0);
      std::string cells(len, alphabet[0]);
      for (;;) {
        if (!visit(Picture(m, n, cells))) return;
        std::size_t i = len;
        while (i-- > 0) {
          if (++digits[i] < k) {
            cells[i] = alphabet[digits[i]];
            break;
          }
          digits[i] = 0;
          cells[i] = alphabet[0];
        }
        if (i == std::size_t(-1)) break;
      }
    }
  }
}

bool enumeration_less(const Alphabet& alphabet, const Picture& x, const Picture& y) {
  if (x.rows() != y.rows()) return x.rows() < y.rows();
  if (x.cols() != y.cols()) return x.cols() < y.cols();
  const auto& a = x.cells();
  const auto& b = y.cells();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return alphabet.index_of(a[i]) < alphabet.index_of(b[i]);
  }
  return false;
}

std::vector<Picture> language_up_to(const Automaton2D& a, DimBounds b, std::size_t budget) {
  std::vector<Picture> out;
  for_each_picture(a.alphabet(), b, budget, [&](const Picture& w) {
    if (accepts(a, w.view())) out.push_back(w);
    return true;
  });
  return out;
}

std::optional<Counterexample> equivalent_up_to(const Automaton2D& candidate,
                                               const PicturePredicate& target, DimBounds b,
                                               EnumOptions options) {
  check_bounds(b);
  if (options.strategy == Strategy::Exhaustive) {
    std::optional<Counterexample> found;
    for_each_picture(candidate.alphabet(), b, options.budget, [&](const Picture& w) {
      bool got = accepts(candidate, w.view());
      bool expected = target(w.view());
      if (got == expected) return true;
      found = make_counterexample(candidate, w, expected, got, "exhaustive");
      return false;
    });
    return found;
  }
  std::size_t nodes = 0;
  for (int m = 1; m <= b.max_rows; ++m) {
    for (int n = 1; n <= b.max_cols; ++n) {
      DecisionTree tree(candidate, target, m, n, nodes, options.budget);
      if (auto w = tree.run()) {
        bool got = accepts(candidate, w->view());
        return make_counterexample(candidate, std::move(*w), !got, got, "exhaustive");
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> equivalent_on(const Automaton2D& candidate,
                                            const PicturePredicate& target,
                                            const std::vector<Picture>& domain) {
  for (const auto& w : domain) {
    bool got = accepts(candidate, w.view());
    bool expected = target(w.view());
    if (got != expected) return make_counterexample(candidate, w, expected, got, "exhaustive");
  }
  return std::nullopt;
}

std::vector<Picture> separated_layouts(const Alphabet& alphabet, DimBounds b, std::size_t budget) {
  check_bounds(b);
  std::vector<Picture> out;
  const std::size_t k = alphabet.size();
  for (int m = 3; m <= b.max_rows; ++m) {
    for (int n = 3; n <= b.max_cols; ++n) {
      const std::size_t free = std::size_t(m - 1) * (n - 1);
      std::size_t per = sat_mul(sat_pow(k, free), std::size_t(m - 2) * (n - 2));
      if (sat_add(out.size(), per) > budget)
        throw CapacityError("separated layout enumeration exceeds the budget of " +
                            std::to_string(budget));
      for (int sr = 2; sr < m; ++sr) {
        for (int sc = 2; sc < n; ++sc) {
          std::vector<std::size_t> slots;
          std::string cells(std::size_t(m) * n, alphabet[0]);
          for (int r = 1; r <= m; ++r) {
            for (int c = 1; c <= n; ++c) {
              std::size_t i = std::size_t(r - 1) * n + (c - 1);
              if (r == sr || c == sc)
                cells[i] = kBoundary;
              else
                slots.push_back(i);
            }
          }
          std::vector<std::size_t> digits(slots.size(), 0);
          for (;;) {
            out.emplace_back(m, n, cells, true);
            std::size_t i = slots.size();
            while (i-- > 0) {
              if (++digits[i] < k) {
                cells[slots[i]] = alphabet[digits[i]];
                break;
              }
              digits[i] = 0;
              cells[slots[i]] = alphabet[0];
            }
            if (i == std::size_t(-1)) break;
          }
        }
      }
    }
  }
  return out;
}

std::optional<Counterexample> flip_attack(const Automaton2D& candidate, const Picture& w,
                                          const PicturePredicate& target, std::size_t trace_limit) {
  auto runs = accepting_runs(candidate, w.view(), trace_limit);
  if (runs.empty()) throw PreconditionError("flip_attack needs a picture the candidate accepts");
  for (const auto& trace : runs) {
    auto seen = visited_cells(trace);
    for (int r = 1; r <= w.rows(); ++r) {
      for (int c = 1; c <= w.cols(); ++c) {
        if (seen.contains({r, c}) || w(r, c) == kBoundary) continue;
        for (char s : candidate.alphabet()) {
          if (s == w(r, c)) continue;
          Picture flipped = w.with_cell({r, c}, s);
          if (target(flipped.view())) continue;
          if (!accepts(candidate, flipped.view()))
            throw std::logic_error("replayed accepting trace failed on a flipped picture");
          return Counterexample{std::move(flipped), false, true, trace, "flip-accept"};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> flip_attack_rejecting(const Automaton2D& candidate,
                                                    const Picture& w,
                                                    const PicturePredicate& target) {
  auto result = run_deterministic(candidate, w.view());
  if (result.accepted()) throw PreconditionError("flip_attack_rejecting needs a rejected picture");
  auto seen = visited_cells(result.trace);
  for (int r = 1; r <= w.rows(); ++r) {
    for (int c = 1; c <= w.cols(); ++c) {
      if (seen.contains({r, c}) || w(r, c) == kBoundary) continue;
      for (char s : candidate.alphabet()) {
        if (s == w(r, c)) continue;
        Picture flipped = w.with_cell({r, c}, s);
        if (!target(flipped.view())) continue;
        if (accepts(candidate, flipped.view()))
          throw std::logic_error("replayed rejecting run changed on a flipped picture");
        return Counterexample{std::move(flipped), true, false, result.trace, "flip-reject"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> refute(const Automaton2D& candidate, ConcatKind kind,
                                     const Automaton2D& a, const Automaton2D& b, DimBounds bounds,
                                     RefuteOptions options) {
  if (a.alphabet() != candidate.alphabet() || b.alphabet() != candidate.alphabet())
    throw AlphabetError("candidate and factors must share one alphabet");
  PicturePredicate target = [&](PictureView w) { return concat_membership(kind, a, b, w); };

  if (options.exhaustive) {
    if (auto cx = equivalent_up_to(candidate, target, bounds, {options.budget, Strategy::Exhaustive}))
      return cx;
  }
  if (!options.flips) return std::nullopt;

  std::optional<Counterexample> found;
  for_each_picture(candidate.alphabet(), bounds, options.budget, [&](const Picture& w) {
    if (accepts(candidate, w.view())) found = flip_attack(candidate, w, target);
    return !found;
  });
  if (found || !candidate.deterministic()) return found;
  for_each_picture(candidate.alphabet(), bounds, options.budget, [&](const Picture& w) {
    if (!accepts(candidate, w.view())) found = flip_attack_rejecting(candidate, w, target);
    return !found;
  });
  return found;
}

}  // namespace pica
