#pragma once

// Seeded random instances. Terminals are named t0.., inner nodes x0..

#include <cstdint>
#include <random>

#include "pathpack/network.hpp"
#include "pathpack/solvers.hpp"

namespace pathpack {

struct GenParams {
  int nodes = 6;
  int terminals = 3;
  int edges = 8;
  double clutter_density = 0.5;
  std::uint64_t seed = 1;
  bool ensure_eulerian = false;
  bool ensure_flat = false;
  bool ensure_simple = false;  // members of size 2 or 3, pairwise sharing at most one terminal
  bool ensure_integral = false;
  bool double_edges = false;
  int max_retries = 200;
};

/// Portable 64-bit engine plus bounded draws that do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

/// Throws PreconditionError on bad parameters and BoundExceeded when the
/// retry budget runs out.
Network generate(const GenParams& params, const SolverLimits& limits = SolverLimits::from_env());

}  // namespace pathpack
