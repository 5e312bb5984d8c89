#pragma once

// Exact rational simplex for packing LPs over the unit box:
//
//   maximize   sum_i w_i x_i
//   subject to sum_{i in S} x_i <= 1   for every constraint set S
//              0 <= x_i <= 1

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace excl {

using Rational = boost::multiprecision::cpp_rational;

/// "3/2", "-1", "0".
std::string to_string(const Rational& q);

class LpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxLpVariables = 200;

struct LpProblem {
  std::size_t variables = 0;
  std::vector<std::vector<std::size_t>> constraints;
  /// One weight per variable; empty means every weight is 1.
  std::vector<Rational> objective;

  /// Throws LpError for empty or out-of-range constraint sets, repeated
  /// indices within a set, or a weight vector of the wrong length.
  void validate() const;
  Rational weight(std::size_t i) const { return objective.empty() ? Rational(1) : objective[i]; }
};

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Tableau simplex, Bland's rule, exact arithmetic. Throws LpError on a
/// malformed problem and SizeLimitError above kMaxLpVariables.
LpSolution lp_max(const LpProblem& problem);

/// Exact check of every constraint and box bound (no tolerance).
bool is_feasible(const LpProblem& problem, std::span<const Rational> x);
Rational objective_value(const LpProblem& problem, std::span<const Rational> x);

}  // namespace excl
