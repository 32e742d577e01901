#pragma once

// Invariant suites run by `pathpack check-theorems`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathpack/dual.hpp"
#include "pathpack/multiflow.hpp"
#include "pathpack/network.hpp"
#include "pathpack/solvers.hpp"

namespace pathpack {

enum class CheckStatus { Pass, Fail, Skip };
const char* to_string(CheckStatus s);

struct CheckLine {
  std::string anchor;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

struct SuiteReport {
  std::string id;
  std::vector<CheckLine> lines;
  /// Fail if any line fails, Pass if any passes, Skip otherwise.
  CheckStatus status() const;
};

struct CheckOptions {
  SolverLimits solver = SolverLimits::from_env();
  ExpansionLimits expansions = ExpansionLimits::from_env();
  std::size_t max_optima = 2000;  // integer optima inspected for augmenting sequences
};

/// t1, t2, t5, t8, locking, pivots.
const std::vector<std::string>& suite_ids();
/// Throws PreconditionError on an unknown suite id.
SuiteReport run_suite(const Network& net, std::string_view id, const CheckOptions& opts = {});

/// The clutter of net carried into expand(net, X) and restricted to r.
Network expanded_with(const Network& net, const Expansion& x, const Clutter& r);

/// A weak-optimal fractional multiflow of h that locks every listed
/// terminal set, if one exists.
std::optional<Multiflow> locking_optimum(const Network& h, const std::vector<Member>& sets,
                                         const SolverLimits& limits = SolverLimits::from_env());

struct AugmentingAudit {
  std::size_t flows = 0;       // qualifying integer flows inspected
  std::size_t subsets = 0;     // (flow, subset) pairs compared
  std::vector<std::string> mismatches;
  bool complete = true;        // false when the optimum cap was hit
};

/// Over integer flows of h that are weak-optimal (Theta = theta^FR),
/// maximum and cover every edge: for every proper terminal subset A, an
/// augmenting sequence exists iff the flow does not lock A.
AugmentingAudit audit_augmenting_sequences(const Network& h, const SolverLimits& limits, std::size_t max_optima);

struct PivotAudit {
  bool qualifying = false;     // the solver's flow is weak-optimal and maximum
  std::vector<std::string> outside;  // pivots lying outside the union of blocks
  std::size_t tridents = 0;
};

/// Tridents of the solver's maximum weak-optimal flow in expand(net, X).
PivotAudit audit_pivots(const Network& net, const Expansion& x, const SolverLimits& limits);

}  // namespace pathpack
