#include "exclusivity/lp.hpp"

#include <algorithm>
#include <optional>

#include "exclusivity/graph.hpp"

namespace excl {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void LpProblem::validate() const {
  if (!objective.empty() && objective.size() != variables)
    throw LpError("objective has " + std::to_string(objective.size()) + " weights for " +
                  std::to_string(variables) + " variables");
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const auto& set = constraints[c];
    if (set.empty()) throw LpError("constraint " + std::to_string(c) + " is empty");
    std::vector<std::size_t> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= variables)
      throw LpError("constraint " + std::to_string(c) + " references a missing variable");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw LpError("constraint " + std::to_string(c) + " repeats a variable");
  }
}

namespace {

// Dense tableau. Rows 0..m-1 are constraints (packing sets, then one upper
// bound per variable); the last row holds reduced costs, with the negated
// objective value in the rhs column.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p)
      : n_(p.variables),
        m_(p.constraints.size() + p.variables),
        cols_(n_ + m_),
        cells_((m_ + 1) * (cols_ + 1)),
        basis_(m_) {
    for (std::size_t r = 0; r < p.constraints.size(); ++r)
      for (std::size_t v : p.constraints[r]) at(r, v) = 1;
    for (std::size_t v = 0; v < n_; ++v) at(p.constraints.size() + v, v) = 1;
    for (std::size_t r = 0; r < m_; ++r) {
      at(r, n_ + r) = 1;
      rhs(r) = 1;
      basis_[r] = n_ + r;
    }
    for (std::size_t v = 0; v < n_; ++v) at(m_, v) = p.weight(v);
  }

  std::size_t solve() {
    std::size_t pivots = 0;
    while (true) {
      const auto entering = entering_column();
      if (!entering) return pivots;
      const auto leaving = leaving_row(*entering);
      // Every variable is boxed, so some row always limits the step.
      if (!leaving) throw LpError("unbounded direction in a boxed LP");
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  Rational value() const { return -cell(m_, cols_); }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = cell(r, cols_);
    return x;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& cell(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }

  // Bland: lowest-index column with positive reduced cost.
  std::optional<std::size_t> entering_column() const {
    for (std::size_t c = 0; c < cols_; ++c)
      if (cell(m_, c) > 0) return c;
    return std::nullopt;
  }

  // Minimum ratio; ties go to the row whose basic variable has the lowest index.
  std::optional<std::size_t> leaving_row(std::size_t col) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& a = cell(r, col);
      if (a <= 0) continue;
      Rational ratio = cell(r, cols_) / a;
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = cell(row, col);
    for (std::size_t c = 0; c <= cols_; ++c)
      if (cell(row, c) != 0) at(row, c) /= p;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const Rational f = cell(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c)
        if (cell(row, c) != 0) at(r, c) -= f * cell(row, c);
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution lp_max(const LpProblem& problem) {
  if (problem.variables > kMaxLpVariables)
    throw SizeLimitError("LP has " + std::to_string(problem.variables) +
                         " variables; limit is " + std::to_string(kMaxLpVariables));
  problem.validate();
  Tableau t(problem);
  LpSolution s;
  s.pivots = t.solve();
  s.value = t.value();
  s.x = t.primal();
  return s;
}

bool is_feasible(const LpProblem& problem, std::span<const Rational> x) {
  if (x.size() != problem.variables) return false;
  for (const auto& xi : x)
    if (xi < 0 || xi > 1) return false;
  for (const auto& set : problem.constraints) {
    Rational sum = 0;
    for (std::size_t v : set) sum += x[v];
    if (sum > 1) return false;
  }
  return true;
}

Rational objective_value(const LpProblem& problem, std::span<const Rational> x) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size() && i < problem.variables; ++i)
    sum += problem.weight(i) * x[i];
  return sum;
}

}  // namespace excl
