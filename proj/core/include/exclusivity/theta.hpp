#pragma once

// Lovász theta of a graph:
//
//   maximize <J, X>  subject to  tr X = 1,  X_ij = 0 for every edge ij,  X ⪰ 0.
//
// Solved by a boundary-point (dual augmented Lagrangian) iteration. Both
// reported values are bounds: the primal matrix is repaired to be exactly
// feasible, so <J, X> <= theta, and the dual value lambda_max(J - sum_e y_e E_e)
// >= theta for any edge multipliers y. Their gap therefore brackets theta.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "exclusivity/graph.hpp"
#include "exclusivity/linalg.hpp"

namespace excl {

inline constexpr std::size_t kMaxThetaVertices = 50;

struct ThetaOptions {
  double tol = 1e-7;
  std::size_t max_iterations = 200000;
  /// ADMM over-relaxation factor in (0, 2).
  double relaxation = 1.6;
  /// Residual and gap checks happen every `check_interval` iterations.
  std::size_t check_interval = 10;
};

struct ThetaResult {
  double value = 0.0;  ///< <J, X> of the returned (feasible) primal matrix
  SymMatrix primal;
  double dual_value = 0.0;
  double gap = 0.0;  ///< |value - dual_value|
  std::size_t iterations = 0;
  double primal_residual = 0.0;  ///< ||A(X) - b||_2 of the iterate before repair
  /// Dual multipliers, one per edge in Graph::edges() order.
  std::vector<double> edge_multipliers;
};

class ThetaConvergenceError : public std::runtime_error {
 public:
  explicit ThetaConvergenceError(ThetaResult best);
  const ThetaResult& best() const noexcept { return best_; }

 private:
  ThetaResult best_;
};

/// Throws SizeLimitError above kMaxThetaVertices, std::invalid_argument for
/// tol < 1e-9, ThetaConvergenceError if the iteration cap is reached.
ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options = {});

/// n cos(pi/n) / (1 + cos(pi/n)); throws std::invalid_argument unless n is odd and >= 3.
double odd_cycle_theta(std::size_t n);

struct PrimalCheck {
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
  double max_edge_entry = 0.0;
  double objective = 0.0;
  bool ok = false;
};

/// Re-checks a primal matrix from scratch with a separate eigendecomposition:
/// PSD (min eigenvalue >= -tol), |tr X - 1| <= tol and |X_ij| <= tol on edges.
PrimalCheck verify_primal_certificate(const Graph& g, const SymMatrix& x, double tol);

/// lambda_max(J - sum_e y_e E_e): an upper bound on theta for any multipliers.
double dual_bound(const Graph& g, const std::vector<double>& edge_multipliers);

}  // namespace excl
