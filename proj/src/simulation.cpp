#include "pica/simulation.hpp"

#include <deque>
#include <unordered_map>

#include "pica/error.hpp"

namespace pica {

namespace {

/// Dense encoding of configurations over one input: location index
/// r * (cols + 2) + c for band cells, `sink()` for the escape sink.
class ConfigSpace {
 public:
  ConfigSpace(const Automaton2D& a, PictureView w)
      : a_(a), w_(w), width_(w.cols() + 2), band_((w.rows() + 2) * (w.cols() + 2)) {}

  int sink() const noexcept { return band_; }
  int locations() const noexcept { return band_ + 1; }
  std::size_t size() const noexcept { return std::size_t(a_.num_states()) * locations(); }

  int encode(StateId q, int loc) const noexcept { return q * locations() + loc; }
  StateId state_of(int id) const noexcept { return id / locations(); }
  int loc_of(int id) const noexcept { return id % locations(); }

  int start() const noexcept { return width_ + 1; }

  int symbol_at(int loc) const {
    if (loc == band_) return a_.boundary_index();
    char ch = w_.at(loc / width_, loc % width_);
    int s = a_.symbol_index(ch);
    if (s < 0) throw InputError(std::string("symbol '") + ch + "' not in the automaton's alphabet");
    return s;
  }

  /// New location after moving, or -1 when the move is dropped.
  int step(int loc, Direction d) const noexcept {
    if (loc == band_) return band_;
    int r = loc / width_, c = loc % width_;
    switch (d) {
      case Direction::U: --r; break;
      case Direction::D: ++r; break;
      case Direction::L: --c; break;
      case Direction::R: ++c; break;
    }
    bool in_band = r >= 0 && c >= 0 && r <= w_.rows() + 1 && c <= w_.cols() + 1;
    if (in_band) return r * width_ + c;
    switch (a_.variant()) {
      case Variant::TwoWay: return band_;
      case Variant::ThreeWay: return d == Direction::D ? band_ : -1;
      case Variant::FourWay: return -1;
    }
    return -1;
  }

  Configuration decode(int id) const {
    int loc = loc_of(id);
    if (loc == band_) return {state_of(id), std::nullopt};
    return {state_of(id), Position{loc / width_, loc % width_}};
  }

  int encode(const Configuration& c) const {
    if (!c.location) return encode(c.state, band_);
    const auto& p = *c.location;
    if (p.row < 0 || p.col < 0 || p.row > w_.rows() + 1 || p.col > w_.cols() + 1)
      throw RangeError("configuration outside the extended band");
    return encode(c.state, p.row * width_ + p.col);
  }

  const Automaton2D& automaton() const noexcept { return a_; }

 private:
  const Automaton2D& a_;
  PictureView w_;
  int width_;
  int band_;
};

void require_states(const Automaton2D& a) {
  if (a.initial() < 0 || a.accept() < 0)
    throw InputError("automaton '" + a.name() + "' lacks an initial or accepting state");
}

}  // namespace

void check_alphabet(const Alphabet& alphabet, const Picture& w) {
  for (char c : w.cells()) {
    if (c == kBoundary && w.allows_hash()) continue;
    if (!alphabet.contains(c))
      throw InputError(std::string("picture symbol '") + c + "' not in the automaton's alphabet");
  }
}

std::vector<Configuration> successors(const Automaton2D& a, PictureView w, const Configuration& c) {
  ConfigSpace space(a, w);
  int id = space.encode(c);
  int loc = space.loc_of(id);
  std::vector<Configuration> out;
  if (c.state == a.accept()) return out;
  for (const auto& m : a.moves_at(c.state, space.symbol_at(loc))) {
    int next = space.step(loc, m.dir);
    if (next >= 0) out.push_back(space.decode(space.encode(m.to, next)));
  }
  return out;
}

bool accepts(const Automaton2D& a, PictureView w) {
  require_states(a);
  if (a.initial() == a.accept()) return true;
  ConfigSpace space(a, w);
  std::vector<char> seen(space.size(), 0);
  std::vector<int> stack;
  int start = space.encode(a.initial(), space.start());
  seen[start] = 1;
  stack.push_back(start);
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    int loc = space.loc_of(id);
    for (const auto& m : a.moves_at(space.state_of(id), space.symbol_at(loc))) {
      int next = space.step(loc, m.dir);
      if (next < 0) continue;
      if (m.to == a.accept()) return true;
      int nid = space.encode(m.to, next);
      if (!seen[nid]) {
        seen[nid] = 1;
        stack.push_back(nid);
      }
    }
  }
  return false;
}

bool accepts(const Automaton2D& a, const Picture& w) {
  check_alphabet(a.alphabet(), w);
  return accepts(a, w.view());
}

RunResult run_deterministic(const Automaton2D& a, PictureView w) {
  if (!a.deterministic()) throw ModeError("run_deterministic needs a deterministic automaton");
  require_states(a);
  ConfigSpace space(a, w);
  RunResult result{RunOutcome::RejectedUndefined, {w.rows(), w.cols(), {}}};
  std::vector<char> seen(space.size(), 0);
  int id = space.encode(a.initial(), space.start());
  for (;;) {
    result.trace.steps.push_back(space.decode(id));
    if (space.state_of(id) == a.accept()) {
      result.outcome = RunOutcome::Accepted;
      return result;
    }
    if (seen[id]) {
      result.outcome = RunOutcome::RejectedLoop;
      return result;
    }
    seen[id] = 1;
    int loc = space.loc_of(id);
    auto images = a.moves_at(space.state_of(id), space.symbol_at(loc));
    if (images.size() > 1) throw ModeError("nondeterministic fan-out in a det automaton");
    if (images.empty()) return result;
    int next = space.step(loc, images.front().dir);
    if (next < 0) return result;
    id = space.encode(images.front().to, next);
  }
}

std::vector<RunTrace> accepting_runs(const Automaton2D& a, PictureView w, std::size_t limit) {
  require_states(a);
  std::vector<RunTrace> out;
  if (limit == 0) return out;
  ConfigSpace space(a, w);
  int start = space.encode(a.initial(), space.start());
  if (a.initial() == a.accept()) {
    out.push_back({w.rows(), w.cols(), {space.decode(start)}});
    return out;
  }

  // Reachable configuration graph.
  std::unordered_map<int, int> index;
  std::vector<int> nodes;
  std::vector<std::vector<int>> succ;
  auto intern = [&](int id) {
    auto [it, fresh] = index.emplace(id, static_cast<int>(nodes.size()));
    if (fresh) {
      nodes.push_back(id);
      succ.emplace_back();
    }
    return std::pair{it->second, fresh};
  };
  std::deque<int> queue;
  queue.push_back(intern(start).first);
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    int id = nodes[n];
    if (space.state_of(id) == a.accept()) continue;
    int loc = space.loc_of(id);
    for (const auto& m : a.moves_at(space.state_of(id), space.symbol_at(loc))) {
      int next = space.step(loc, m.dir);
      if (next < 0) continue;
      auto [k, fresh] = intern(space.encode(m.to, next));
      succ[n].push_back(k);
      if (fresh) queue.push_back(k);
    }
  }

  // Configurations from which acceptance is reachable.
  std::vector<std::vector<int>> pred(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n)
    for (int k : succ[n]) pred[k].push_back(static_cast<int>(n));
  std::vector<char> live(nodes.size(), 0);
  std::vector<int> work;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (space.state_of(nodes[n]) == a.accept()) {
      live[n] = 1;
      work.push_back(static_cast<int>(n));
    }
  }
  while (!work.empty()) {
    int n = work.back();
    work.pop_back();
    for (int p : pred[n]) {
      if (!live[p]) {
        live[p] = 1;
        work.push_back(p);
      }
    }
  }
  if (!live[0]) return out;

  // Simple paths, depth-first, in transition order.
  std::vector<char> on_path(nodes.size(), 0);
  std::vector<int> path{0};
  std::vector<std::size_t> cursor{0};
  on_path[0] = 1;
  while (!path.empty() && out.size() < limit) {
    int n = path.back();
    if (space.state_of(nodes[n]) == a.accept()) {
      RunTrace t{w.rows(), w.cols(), {}};
      for (int k : path) t.steps.push_back(space.decode(nodes[k]));
      out.push_back(std::move(t));
      on_path[n] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    auto& i = cursor.back();
    if (i < succ[n].size()) {
      int k = succ[n][i++];
      if (live[k] && !on_path[k]) {
        on_path[k] = 1;
        path.push_back(k);
        cursor.push_back(0);
      }
    } else {
      on_path[n] = 0;
      path.pop_back();
      cursor.pop_back();
    }
  }
  return out;
}

std::set<Position> visited_cells(const RunTrace& t) {
  std::set<Position> out;
  for (const auto& c : t.steps) {
    if (!c.location) continue;
    const auto& p = *c.location;
    if (p.row >= 1 && p.col >= 1 && p.row <= t.rows && p.col <= t.cols) out.insert(p);
  }
  return out;
}

std::string format_trace(const Automaton2D& a, PictureView w, const RunTrace& t) {
  std::string out;
  for (const auto& c : t.steps) {
    out += a.state_name(c.state);
    if (c.location) {
      out += " @ (" + std::to_string(c.location->row) + "," + std::to_string(c.location->col) +
             ") reads '";
      out += w.at(*c.location);
    } else {
      out += " @ ESC reads '";
      out += kBoundary;
    }
    out += "'\n";
  }
  return out;
}

}  // namespace pica
