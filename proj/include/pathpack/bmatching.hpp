#pragma once

// Uncapacitated b-matching on a simple graph, solved by vertex-copy
// reduction to maximum-cardinality matching.

#include <string>
#include <utility>
#include <vector>

#include "pathpack/rational.hpp"

namespace pathpack {

struct BMatchingInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // u != v, no duplicates
  std::vector<Rational> b;                 // one per vertex, non-negative integers
  std::vector<std::string> labels;         // optional, used in diagnostics
};

struct BMatchingResult {
  long long value = 0;
  std::vector<long long> multiplicity;  // one per edge
};

/// Throws PreconditionError when some b(v) is negative or not an integer.
BMatchingResult max_b_matching(const BMatchingInstance& inst);

/// Every vertex load within b and multiplicities non-negative.
bool is_feasible_b_matching(const BMatchingInstance& inst, const std::vector<long long>& multiplicity);

}  // namespace pathpack
