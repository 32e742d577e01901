#include "pathpack/lp.hpp"

#include <stdexcept>

namespace pathpack {

namespace {

// Tableau row r: sum_j t[r][j] x_j = t[r][rhs]. Row 0 of `cost` holds reduced
// costs (c_j - z_j) and the negated objective value in the rhs column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set_cost(const std::vector<Rational>& c) {
    cost_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost_[j] = c[j];
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j] != 0) cost_[j] -= cb * t_[r][j];
      }
    }
  }

  Rational objective() const { return -cost_[cols_]; }

  // Bland: smallest improving column, ratio ties broken by smallest basic index.
  // Returns false when optimal; throws on unboundedness.
  bool step(const std::vector<char>& allowed) {
    std::size_t enter = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (allowed[j] && cost_[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols_) return false;
    std::size_t leave = rows_;
    Rational best;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (t_[r][enter] <= 0) continue;
      Rational ratio = t_[r][cols_] / t_[r][enter];
      if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows_) throw std::domain_error("unbounded");
    pivot(leave, enter);
    return true;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (t_[r][j] != 0) t_[r][j] /= p;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (t_[r][j] != 0) nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational factor = t_[i][c];
      for (std::size_t j : nz) t_[i][j] -= factor * t_[r][j];
    }
    if (cost_[c] != 0) {
      const Rational factor = cost_[c];
      for (std::size_t j : nz) cost_[j] -= factor * t_[r][j];
    }
    basis_[r] = c;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();

  // Normalize to non-negative right-hand sides.
  std::vector<LpRow> rows = lp.rows;
  for (LpRow& row : rows) {
    if (row.coeffs.size() != n) throw std::invalid_argument("LP row width mismatch");
    if (row.rhs < 0) {
      for (Rational& a : row.coeffs) a = -a;
      row.rhs = -row.rhs;
      if (row.sense == Sense::LessEq) row.sense = Sense::GreaterEq;
      else if (row.sense == Sense::GreaterEq) row.sense = Sense::LessEq;
    }
  }

  std::size_t slack_count = 0;
  std::size_t art_count = 0;
  for (const LpRow& row : rows) {
    if (row.sense != Sense::Equal) ++slack_count;
    if (row.sense != Sense::LessEq) ++art_count;
  }
  const std::size_t cols = n + slack_count + art_count;
  Tableau tab(m, cols);
  std::size_t next_slack = n;
  std::size_t next_art = n + slack_count;
  std::vector<char> is_art(cols, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const LpRow& row = rows[r];
    for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = row.coeffs[j];
    tab.rhs(r) = row.rhs;
    switch (row.sense) {
      case Sense::LessEq:
        tab.at(r, next_slack) = 1;
        tab.basis()[r] = next_slack++;
        break;
      case Sense::GreaterEq:
        tab.at(r, next_slack++) = -1;
        tab.at(r, next_art) = 1;
        is_art[next_art] = 1;
        tab.basis()[r] = next_art++;
        break;
      case Sense::Equal:
        tab.at(r, next_art) = 1;
        is_art[next_art] = 1;
        tab.basis()[r] = next_art++;
        break;
    }
  }

  LpSolution sol;
  std::vector<char> allowed(cols, 1);
  if (art_count > 0) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
      if (is_art[j]) phase1[j] = -1;
    }
    tab.set_cost(phase1);
    while (tab.step(allowed)) {
    }
    if (tab.objective() < 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_art[tab.basis()[r]]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!is_art[j] && tab.at(r, j) != 0) {
          tab.pivot(r, j);
          break;
        }
      }
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (is_art[j]) allowed[j] = 0;
    }
  }

  std::vector<Rational> phase2(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  tab.set_cost(phase2);
  try {
    while (tab.step(allowed)) {
    }
  } catch (const std::domain_error&) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.value = tab.objective();
  sol.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] < n) sol.x[tab.basis()[r]] = tab.rhs(r);
  }
  return sol;
}

}  // namespace pathpack
