#pragma once

// Dual side: clutter extensions, expansion enumeration, the block graph
// Gamma with its line-graph b-matching, the certificate function phi and
// its search/verification, the weak max-min value and the minimal dual
// solution.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathpack/bmatching.hpp"
#include "pathpack/multiflow.hpp"
#include "pathpack/network.hpp"
#include "pathpack/rational.hpp"
#include "pathpack/solvers.hpp"

namespace pathpack {

struct ExpansionLimits {
  std::size_t max_expansions = 200000;
  int max_inner = -1;  // cap on inner nodes assigned to blocks, -1 = none

  /// Reads PATHPACK_MAX_EXPANSIONS when set.
  static ExpansionLimits from_env();
};

/// Every pair strong in k1 is strong in k2. Throws PreconditionError when a
/// member mentions a node that is not a terminal of net.
bool clutter_extends(const Network& net, const Clutter& k1, const Clutter& k2);

/// All subsets of a flat clutter, sorted lexicographically (empty first).
/// Throws PreconditionError on non-flat input.
std::vector<Clutter> enumerate_flat_extensions(const Clutter& k);

/// Number of expansions enumerate_expansions would produce.
std::size_t count_expansions(const Network& net, int max_inner = -1);

/// Each inner node goes to one block or to none. Ordered by assignment key
/// (first inner node most significant, "none" first), so the trivial
/// expansion comes first. Throws BoundExceeded above the count cap.
std::vector<Expansion> enumerate_expansions(const Network& net,
                                            const ExpansionLimits& limits = ExpansionLimits::from_env());

/// lambda(A) in net, with lambda(T) = 0.
int lambda_or_zero(const Network& net, std::span<const int> terminal_subset);
/// beta(A) in net, with lambda(T) = 0.
Rational beta_or_full(const Network& net, std::span<const int> terminal_subset);

struct GammaEdge {
  Member pair;  // terminal node indices of the original network
  Rational mul;
};

struct GammaGraph {
  int block_count = 0;
  std::vector<GammaEdge> edges;  // one per member of R, in clutter order
};

/// Gamma for (X, R); multiplicities are beta values in expand(net, X).
GammaGraph build_gamma(const Network& net, const Expansion& x, const Clutter& r);

/// Line graph of Gamma with b = mul.
BMatchingInstance line_graph_instance(const Network& net, const GammaGraph& gamma);

struct PhiBreakdown {
  std::vector<int> lambda_values;  // per terminal position, in expand(net, X)
  std::vector<Rational> beta_values;  // per member of R
  Rational half_lambda_sum;
  Rational beta_sum;
  BMatchingInstance line_graph;
  BMatchingResult matching;
  Rational value;
};

/// Throws PreconditionError unless r is flat and extends net's clutter.
PhiBreakdown phi_breakdown(const Network& net, const Expansion& x, const Clutter& r);
Rational phi(const Network& net, const Expansion& x, const Clutter& r);

struct MatchingPick {
  std::array<NodeId, 2> first;
  std::array<NodeId, 2> second;
  long long count = 0;

  friend bool operator==(const MatchingPick&, const MatchingPick&) = default;
};

/// Self-contained by terminal and node names.
struct Certificate {
  std::vector<std::array<NodeId, 2>> extension;
  std::map<NodeId, std::vector<NodeId>> expansion;
  std::map<NodeId, long long> lambda_values;
  std::map<std::array<NodeId, 2>, Rational> beta_values;
  std::vector<MatchingPick> matching;
  Rational value;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate make_certificate(const Network& net, const Expansion& x, const Clutter& r);

struct CertificateSearch {
  Certificate certificate;
  Clutter extension;
  Expansion expansion;
  Rational min_value;
  std::size_t evaluated = 0;
};

/// Minimizes phi over every flat extension and every enumerated expansion.
/// Ties go to the lexicographically smallest extension, then the smallest
/// expansion in enumeration order. The parallel and serial variants return
/// identical results.
CertificateSearch search_certificate(const Network& net,
                                     const ExpansionLimits& limits = ExpansionLimits::from_env());
CertificateSearch search_certificate_serial(const Network& net,
                                            const ExpansionLimits& limits = ExpansionLimits::from_env());

struct VerificationReport {
  std::vector<CheckResult> checks;
  Rational recomputed_value;
  bool recomputed = false;

  bool accepted() const;
  std::vector<std::string> failures() const;
};

/// Recomputes everything from net and (R, X) alone. With a packing, also
/// checks that it is an edge-disjoint integer multiflow with exactly
/// claimed_eta S-paths and that claimed_eta equals phi.
VerificationReport verify_certificate(const Network& net, const Certificate& cert, const Rational& claimed_eta,
                                      const Multiflow* packing = nullptr);

/// 1/2 sum d(X_t) - 1/2 sum_{A in K_X} beta(A). Throws PreconditionError
/// unless the clutter is simple.
Rational weak_dual_value(const Network& net, const Expansion& x);

/// theta^FR of expand(net, X).
Rational expanded_weak_value(const Network& net, const Expansion& x,
                             const SolverLimits& limits = SolverLimits::from_env());

struct MinimalDual {
  Expansion expansion;
  Rational theta_fr;
  std::vector<int> unsaturated;  // edges left unsaturated by some weak optimum
  std::vector<int> reachable;    // the subset reachable from T through them
};

/// Builds X from the saturation pattern of all weak-optimal fractional
/// multiflows. Throws TheoremViolation if two blocks meet.
MinimalDual minimal_dual_solution(const Network& net, const SolverLimits& limits = SolverLimits::from_env());

struct CriticalityReport {
  bool critical = true;
  Rational theta_x;
  std::vector<std::string> flat_neighbours;  // single-node enlargements that do not raise theta
};

/// theta_Y > theta_X for every single-node enlargement Y of X. Since
/// theta is monotone under enlargement, this covers every Y above X.
CriticalityReport check_criticality(const Network& net, const Expansion& x,
                                    const SolverLimits& limits = SolverLimits::from_env());

}  // namespace pathpack
