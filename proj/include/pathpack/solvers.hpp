#pragma once

// Exact desk-scale solvers for the strong problem (maximum number of
// edge-disjoint S-paths) and the weak problem (maximum f[S] + f[W]/2), in
// integer and fractional form.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pathpack/multiflow.hpp"
#include "pathpack/network.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

struct SolverLimits {
  int max_edges = 14;
  std::size_t max_paths = 200000;

  /// Reads PATHPACK_MAX_EDGES and PATHPACK_MAX_PATHS when set.
  static SolverLimits from_env();
};

/// All node-simple T-paths (compound ones included), each once, oriented
/// from the smaller terminal index. Deterministic DFS order.
/// Throws BoundExceeded above the edge or path cap.
std::vector<TPath> enumerate_paths(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

// --- Exact packing over edge capacities -------------------------------------

/// Select paths (with repetition when capacity > 1) so every edge carries at
/// most `capacity` of them, maximizing the summed integer weight.
struct PackingProblem {
  int edge_count = 0;
  int capacity = 1;
  std::vector<std::vector<int>> paths;  // edge lists
  std::vector<long long> weights;
};

struct PackingSolution {
  long long value = 0;
  std::vector<int> chosen;  // indices into PackingProblem::paths
};

/// Memoized search over residual-capacity states; exact.
PackingSolution max_weight_packing(const PackingProblem& problem);

/// Every capacity-1 packing attaining the optimum (each exactly once).
/// Stops after `limit` packings and returns false in that case.
bool for_each_optimal_packing(const PackingProblem& problem,
                              const std::function<void(const std::vector<int>&)>& visit,
                              std::size_t limit = 100000);

/// Every capacity-1 packing of the given paths, the empty one included.
bool for_each_packing(const PackingProblem& problem, const std::function<void(const std::vector<int>&)>& visit,
                      std::size_t limit = 1000000);

// --- Problems ---------------------------------------------------------------

enum class Problem { Strong, Weak };
enum class Mode { Integer, Fractional };

const char* to_string(Problem p);
const char* to_string(Mode m);

struct SolveResult {
  Rational objective;
  Multiflow witness;
  Problem problem = Problem::Strong;
  Mode mode = Mode::Integer;
};

SolveResult solve_strong(const Network& net, Mode mode, const SolverLimits& limits = SolverLimits::from_env());
SolveResult solve_weak(const Network& net, Mode mode, const SolverLimits& limits = SolverLimits::from_env());

/// Integer multiflow with Theta = theta and f[S] = eta. Throws
/// TheoremViolation if the weak optima do not contain a strong optimum.
SolveResult common_solution(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

/// Among integer weak optima, one of maximum size (objective = Theta).
SolveResult maximum_weak_solution(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

/// Maximum number of edge-disjoint T-paths regardless of pair class.
SolveResult max_multiflow(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

/// theta^FR == theta.
bool integrality(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

/// Smallest D <= max_denominator admitting a weak-optimal fractional
/// solution with all weights in (1/D)Z.
std::optional<int> fractionality(const Network& net, int max_denominator,
                                 const SolverLimits& limits = SolverLimits::from_env());

/// Integer weights 2 (S), 1 (W), 0 (equivalent): twice the Theta coefficient.
long long doubled_theta_weight(const Network& net, const TPath& p);

Multiflow to_multiflow(const std::vector<TPath>& paths, std::span<const int> chosen);

/// Weak-problem LP columns (non-compound paths suffice for simple clutters),
/// with optional extra rows. Used by the dual machinery.
struct WeakLp {
  std::vector<TPath> columns;
  std::vector<Rational> objective;  // Theta coefficient per column
};
WeakLp weak_lp_columns(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

}  // namespace pathpack
