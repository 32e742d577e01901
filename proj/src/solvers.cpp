#include "pathpack/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "pathpack/cuts.hpp"
#include "pathpack/errors.hpp"
#include "pathpack/lp.hpp"

namespace pathpack {

SolverLimits SolverLimits::from_env() {
  SolverLimits l;
  if (const char* v = std::getenv("PATHPACK_MAX_EDGES")) l.max_edges = std::stoi(v);
  if (const char* v = std::getenv("PATHPACK_MAX_PATHS")) l.max_paths = std::stoul(v);
  return l;
}

const char* to_string(Problem p) { return p == Problem::Strong ? "strong" : "weak"; }
const char* to_string(Mode m) { return m == Mode::Integer ? "integer" : "fractional"; }

std::vector<TPath> enumerate_paths(const Network& net, const SolverLimits& limits) {
  const Multigraph& g = net.graph();
  if (g.edge_count() > limits.max_edges) {
    throw BoundExceeded("network has " + std::to_string(g.edge_count()) + " edges, path enumeration cap is " +
                        std::to_string(limits.max_edges));
  }
  std::vector<TPath> out;
  std::vector<char> on_path(static_cast<std::size_t>(g.node_count()), 0);
  TPath cur;

  auto dfs = [&](auto&& self, int v, int source) -> void {
    for (int e : g.incident(v)) {
      const int w = g.other_end(e, v);
      if (on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      cur.nodes.push_back(w);
      cur.edges.push_back(e);
      if (net.is_terminal(w) && w > source) {
        out.push_back(cur);
        if (out.size() > limits.max_paths) {
          throw BoundExceeded("more than " + std::to_string(limits.max_paths) + " T-paths");
        }
      }
      self(self, w, source);
      cur.nodes.pop_back();
      cur.edges.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (int s : net.terminals()) {
    cur = TPath{{s}, {}};
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Packing search

namespace {

class PackingSearch {
 public:
  PackingSearch(const PackingProblem& pb, bool include_nonpositive) : pb_(pb) {
    if (pb.capacity < 1) throw PreconditionError("packing capacity must be positive");
    width_ = std::bit_width(static_cast<unsigned>(pb.capacity));
    if (pb.edge_count * width_ > 64) {
      throw BoundExceeded("packing state does not fit in 64 bits (" + std::to_string(pb.edge_count) +
                          " edges at capacity " + std::to_string(pb.capacity) + ")");
    }
    field_ = (std::uint64_t{1} << width_) - 1;
    by_low_.assign(static_cast<std::size_t>(pb.edge_count), {});
    unit_.resize(pb.paths.size());
    for (std::size_t p = 0; p < pb.paths.size(); ++p) {
      const auto& edges = pb.paths[p];
      if (edges.empty()) continue;
      std::uint64_t u = 0;
      for (int e : edges) u += std::uint64_t{1} << (static_cast<unsigned>(e * width_));
      unit_[p] = u;
      if (!include_nonpositive && pb.weights[p] <= 0) continue;
      by_low_[static_cast<std::size_t>(*std::min_element(edges.begin(), edges.end()))].push_back(static_cast<int>(p));
    }
    full_ = 0;
    for (int e = 0; e < pb.edge_count; ++e) {
      full_ |= static_cast<std::uint64_t>(pb.capacity) << static_cast<unsigned>(e * width_);
    }
  }

  std::uint64_t full() const { return full_; }

  int lowest_open(std::uint64_t s) const {
    for (int e = 0; e < pb_.edge_count; ++e) {
      if (field(s, e) != 0) return e;
    }
    return -1;
  }

  std::uint64_t field(std::uint64_t s, int e) const { return (s >> static_cast<unsigned>(e * width_)) & field_; }

  std::uint64_t closed(std::uint64_t s, int e) const {
    return s & ~(field_ << static_cast<unsigned>(e * width_));
  }

  bool fits(std::uint64_t s, int p) const {
    for (int e : pb_.paths[static_cast<std::size_t>(p)]) {
      if (field(s, e) == 0) return false;
    }
    return true;
  }

  std::uint64_t take(std::uint64_t s, int p) const { return s - unit_[static_cast<std::size_t>(p)]; }

  const std::vector<int>& candidates(int e) const { return by_low_[static_cast<std::size_t>(e)]; }

  long long value(std::uint64_t s) {
    if (s == 0) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const int i = lowest_open(s);
    long long best = value(closed(s, i));
    for (int p : candidates(i)) {
      if (fits(s, p)) best = std::max(best, pb_.weights[static_cast<std::size_t>(p)] + value(take(s, p)));
    }
    memo_.emplace(s, best);
    return best;
  }

  long long weight(int p) const { return pb_.weights[static_cast<std::size_t>(p)]; }

 private:
  const PackingProblem& pb_;
  int width_ = 1;
  std::uint64_t field_ = 1;
  std::uint64_t full_ = 0;
  std::vector<std::vector<int>> by_low_;
  std::vector<std::uint64_t> unit_;
  std::unordered_map<std::uint64_t, long long> memo_;
};

}  // namespace

PackingSolution max_weight_packing(const PackingProblem& problem) {
  PackingSearch search(problem, false);
  PackingSolution sol;
  std::uint64_t s = search.full();
  sol.value = search.value(s);
  while (s != 0) {
    const long long target = search.value(s);
    const int i = search.lowest_open(s);
    bool moved = false;
    for (int p : search.candidates(i)) {
      if (search.fits(s, p) && search.weight(p) + search.value(search.take(s, p)) == target) {
        sol.chosen.push_back(p);
        s = search.take(s, p);
        moved = true;
        break;
      }
    }
    if (!moved) s = search.closed(s, i);
  }
  return sol;
}

bool for_each_optimal_packing(const PackingProblem& problem,
                              const std::function<void(const std::vector<int>&)>& visit, std::size_t limit) {
  if (problem.capacity != 1) throw PreconditionError("optimal packing enumeration needs capacity 1");
  PackingSearch search(problem, false);
  std::vector<int> chosen;
  std::size_t count = 0;
  bool complete = true;
  auto rec = [&](auto&& self, std::uint64_t s) -> void {
    if (!complete) return;
    if (s == 0) {
      if (++count > limit) {
        complete = false;
        return;
      }
      visit(chosen);
      return;
    }
    const long long target = search.value(s);
    const int i = search.lowest_open(s);
    if (search.value(search.closed(s, i)) == target) self(self, search.closed(s, i));
    for (int p : search.candidates(i)) {
      if (search.fits(s, p) && search.weight(p) + search.value(search.take(s, p)) == target) {
        chosen.push_back(p);
        self(self, search.take(s, p));
        chosen.pop_back();
      }
    }
  };
  rec(rec, search.full());
  return complete;
}

bool for_each_packing(const PackingProblem& problem, const std::function<void(const std::vector<int>&)>& visit,
                      std::size_t limit) {
  if (problem.capacity != 1) throw PreconditionError("packing enumeration needs capacity 1");
  PackingSearch search(problem, true);
  std::vector<int> chosen;
  std::size_t count = 0;
  bool complete = true;
  auto rec = [&](auto&& self, std::uint64_t s) -> void {
    if (!complete) return;
    if (s == 0) {
      if (++count > limit) {
        complete = false;
        return;
      }
      visit(chosen);
      return;
    }
    const int i = search.lowest_open(s);
    self(self, search.closed(s, i));
    for (int p : search.candidates(i)) {
      if (search.fits(s, p)) {
        chosen.push_back(p);
        self(self, search.take(s, p));
        chosen.pop_back();
      }
    }
  };
  rec(rec, search.full());
  return complete;
}

// ---------------------------------------------------------------------------
// Problems

long long doubled_theta_weight(const Network& net, const TPath& p) {
  switch (path_class(net, p)) {
    case PairClass::Strong: return 2;
    case PairClass::Weak: return 1;
    case PairClass::Equivalent: return 0;
  }
  return 0;
}

Multiflow to_multiflow(const std::vector<TPath>& paths, std::span<const int> chosen) {
  Multiflow f;
  for (int i : chosen) f.add(paths[static_cast<std::size_t>(i)], Rational(1));
  return f;
}

namespace {

PackingProblem packing_for(const Network& net, const std::vector<TPath>& paths,
                           const std::function<long long(const TPath&)>& weight) {
  PackingProblem pb;
  pb.edge_count = net.graph().edge_count();
  for (const TPath& p : paths) {
    pb.paths.push_back(p.edges);
    pb.weights.push_back(weight(p));
  }
  return pb;
}

SolveResult lp_solve(const Network& net, const std::vector<TPath>& columns, const std::vector<Rational>& obj,
                     Problem problem) {
  LpProblem lp;
  lp.objective = obj;
  const int m = net.graph().edge_count();
  std::vector<std::vector<int>> users(static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (int e : columns[c].edges) users[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
  }
  for (int e = 0; e < m; ++e) {
    if (users[static_cast<std::size_t>(e)].empty()) continue;
    LpRow row;
    row.coeffs.assign(columns.size(), Rational(0));
    for (int c : users[static_cast<std::size_t>(e)]) row.coeffs[static_cast<std::size_t>(c)] = 1;
    row.sense = Sense::LessEq;
    row.rhs = 1;
    lp.rows.push_back(std::move(row));
  }
  SolveResult res;
  res.problem = problem;
  res.mode = Mode::Fractional;
  res.objective = 0;
  if (columns.empty()) return res;
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw TheoremViolation("path LP is not bounded-feasible");
  res.objective = sol.value;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (sol.x[c] > 0) res.witness.add(columns[c], sol.x[c]);
  }
  return res;
}

}  // namespace

WeakLp weak_lp_columns(const Network& net, const SolverLimits& limits) {
  WeakLp lp;
  const bool simple = is_simple(net.clutter());
  for (TPath& p : enumerate_paths(net, limits)) {
    if (simple && is_compound(net, p)) continue;
    const long long w = doubled_theta_weight(net, p);
    if (w == 0) continue;
    lp.columns.push_back(std::move(p));
    lp.objective.push_back(make_rational(w, 2));
  }
  return lp;
}

SolveResult solve_strong(const Network& net, Mode mode, const SolverLimits& limits) {
  std::vector<TPath> paths;
  for (TPath& p : enumerate_paths(net, limits)) {
    if (path_class(net, p) == PairClass::Strong) paths.push_back(std::move(p));
  }
  if (mode == Mode::Fractional) {
    return lp_solve(net, paths, std::vector<Rational>(paths.size(), Rational(1)), Problem::Strong);
  }
  auto sol = max_weight_packing(packing_for(net, paths, [](const TPath&) { return 1LL; }));
  SolveResult res;
  res.problem = Problem::Strong;
  res.mode = Mode::Integer;
  res.objective = Rational(static_cast<long>(sol.value));
  res.witness = to_multiflow(paths, sol.chosen);
  return res;
}

SolveResult solve_weak(const Network& net, Mode mode, const SolverLimits& limits) {
  if (mode == Mode::Fractional) {
    WeakLp lp = weak_lp_columns(net, limits);
    return lp_solve(net, lp.columns, lp.objective, Problem::Weak);
  }
  auto paths = enumerate_paths(net, limits);
  auto sol = max_weight_packing(packing_for(net, paths, [&](const TPath& p) { return doubled_theta_weight(net, p); }));
  SolveResult res;
  res.problem = Problem::Weak;
  res.mode = Mode::Integer;
  res.objective = make_rational(sol.value, 2);
  res.witness = to_multiflow(paths, sol.chosen);
  return res;
}

SolveResult common_solution(const Network& net, const SolverLimits& limits) {
  auto paths = enumerate_paths(net, limits);
  const long long scale = net.graph().edge_count() + 1;  // f[S] <= |E|
  auto sol = max_weight_packing(packing_for(net, paths, [&](const TPath& p) {
    return doubled_theta_weight(net, p) * scale + (path_class(net, p) == PairClass::Strong ? 1 : 0);
  }));
  SolveResult res;
  res.problem = Problem::Weak;
  res.mode = Mode::Integer;
  res.witness = to_multiflow(paths, sol.chosen);
  res.objective = theta(net, res.witness);
  const Rational eta = solve_strong(net, Mode::Integer, limits).objective;
  const Rational fs = count_classes(net, res.witness).strong;
  if (fs != eta) {
    throw TheoremViolation("no weak optimum attains eta: best f[S] among weak optima is " + to_string(fs) +
                           ", eta is " + to_string(eta));
  }
  return res;
}

SolveResult maximum_weak_solution(const Network& net, const SolverLimits& limits) {
  auto paths = enumerate_paths(net, limits);
  const long long scale = net.graph().edge_count() + 1;
  auto sol = max_weight_packing(
      packing_for(net, paths, [&](const TPath& p) { return doubled_theta_weight(net, p) * scale + 1; }));
  SolveResult res;
  res.problem = Problem::Weak;
  res.mode = Mode::Integer;
  res.witness = to_multiflow(paths, sol.chosen);
  res.objective = theta(net, res.witness);
  return res;
}

SolveResult max_multiflow(const Network& net, const SolverLimits& limits) {
  auto paths = enumerate_paths(net, limits);
  auto sol = max_weight_packing(packing_for(net, paths, [](const TPath&) { return 1LL; }));
  SolveResult res;
  res.problem = Problem::Strong;
  res.mode = Mode::Integer;
  res.objective = Rational(static_cast<long>(sol.value));
  res.witness = to_multiflow(paths, sol.chosen);
  return res;
}

bool integrality(const Network& net, const SolverLimits& limits) {
  return solve_weak(net, Mode::Fractional, limits).objective == solve_weak(net, Mode::Integer, limits).objective;
}

std::optional<int> fractionality(const Network& net, int max_denominator, const SolverLimits& limits) {
  if (max_denominator < 1) throw PreconditionError("max denominator must be positive");
  WeakLp lp = weak_lp_columns(net, limits);
  const Rational target = lp_solve(net, lp.columns, lp.objective, Problem::Weak).objective;
  PackingProblem pb;
  pb.edge_count = net.graph().edge_count();
  for (std::size_t c = 0; c < lp.columns.size(); ++c) {
    pb.paths.push_back(lp.columns[c].edges);
    pb.weights.push_back(doubled_theta_weight(net, lp.columns[c]));
  }
  for (int d = 1; d <= max_denominator; ++d) {
    pb.capacity = d;
    const long long best = max_weight_packing(pb).value;
    // best counts doubled Theta with weights scaled by d
    if (Rational(static_cast<long>(best)) == target * 2 * d) return d;
  }
  return std::nullopt;
}

}  // namespace pathpack
