#pragma once

#include <span>
#include <vector>

#include "pathpack/network.hpp"
#include "pathpack/rational.hpp"

namespace pathpack {

struct CutResult {
  int value = 0;
  std::vector<int> cut_edges;    // edge indices crossing the witness cut
  std::vector<int> source_side;  // node indices on the source side
};

/// Unit-capacity max flow between two disjoint node sets. Every edge record
/// has capacity one in both directions; the returned cut is the residual
/// reachability cut from the sources. Throws PreconditionError on empty or
/// overlapping sides.
CutResult max_flow(const Multigraph& g, std::span<const int> sources, std::span<const int> sinks);

/// lambda(A): minimum (A, T\A)-cut, A given as terminal node indices.
int lambda(const Network& net, std::span<const int> terminal_subset);
int lambda(const Network& net, int terminal);

/// beta(A) = (sum_{t in A} lambda(t) - lambda(A)) / 2, exact.
Rational beta(const Network& net, std::span<const int> terminal_subset);

/// Number of edges with exactly one endpoint in X.
int cut_degree(const Multigraph& g, std::span<const int> node_set);

}  // namespace pathpack
