#pragma once

#include <vector>

#include "pathpack/rational.hpp"

namespace pathpack {

enum class Sense { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<Rational> coeffs;  // one per structural variable
  Sense sense = Sense::LessEq;
  Rational rhs;
};

/// maximize objective . x  subject to rows, x >= 0.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase dense-tableau simplex over exact rationals with Bland's rule.
/// Deterministic: identical input gives the identical basic solution.
LpSolution solve_lp(const LpProblem& lp);

}  // namespace pathpack
