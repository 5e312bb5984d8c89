#include "exclusivity/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "exclusivity/cliques.hpp"

namespace excl {

ThetaConvergenceError::ThetaConvergenceError(ThetaResult best)
    : std::runtime_error("theta iteration cap reached with gap " + std::to_string(best.gap)),
      best_(std::move(best)) {}

namespace {

struct Split {
  SymMatrix positive;
  SymMatrix negative;
};

// Eigendecompositions of a slowly changing matrix, each started from the
// previous eigenvectors. A cold start every so often keeps the basis from
// drifting away from orthogonality.
class WarmEigen {
 public:
  EigenDecomposition operator()(const SymMatrix& m) {
    EigenDecomposition e = uses_++ % kRestart == 0 || basis_.rows() != m.order()
                               ? jacobi_eigen(m)
                               : jacobi_eigen(m, basis_);
    basis_ = e.vectors;
    return e;
  }

 private:
  static constexpr std::size_t kRestart = 100;
  Matrix basis_;
  std::size_t uses_ = 0;
};

// W = W+ + W-, both from one eigendecomposition.
Split split_by_sign(const SymMatrix& w, WarmEigen& eigen) {
  const EigenDecomposition e = eigen(w);
  const std::size_t n = w.order();
  Split out{SymMatrix(n), SymMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double pos = 0.0;
      double neg = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double term = e.vectors(i, k) * e.values[k] * e.vectors(j, k);
        if (e.values[k] > 0.0)
          pos += term;
        else
          neg += term;
      }
      out.positive.set(i, j, pos);
      out.negative.set(i, j, neg);
    }
  }
  return out;
}

class BoundaryPointSolver {
 public:
  BoundaryPointSolver(const Graph& g, const ThetaOptions& options)
      : n_(g.size()), edges_(g.edges()), options_(options), x_(n_), z_(n_), stable_(n_) {
    for (std::size_t i = 0; i < n_; ++i) x_.set(i, i, 1.0 / static_cast<double>(n_));
    // (1/a) 1_S 1_S^T for a maximum independent set S is feasible with value
    // a. When theta equals alpha the iterates approach it only sublinearly.
    const VertexSet s = max_independent_set(g).witness;
    const double a = static_cast<double>(s.size());
    for (std::size_t i : s)
      for (std::size_t j : s) stable_.set(i, j, 1.0 / a);
    sigma_ = 1.0 / static_cast<double>(n_);
    y_.assign(edges_.size(), 0.0);
  }

  ThetaResult run() {
    ThetaResult best;
    best.gap = HUGE_VAL;
    for (std::size_t it = 1; it <= options_.max_iterations; ++it) {
      step();
      if (it % options_.check_interval != 0) continue;
      ThetaResult current = snapshot(it);
      const bool done = current.gap <= options_.tol;
      if (current.gap < best.gap) best = current;
      if (done) return current;
      adapt_penalty(current);
    }
    throw ThetaConvergenceError(std::move(best));
  }

 private:
  // One boundary-point iteration on the dual
  //   min t  s.t.  t I + sum_e y_e E_e - J = Z,  Z ⪰ 0,
  // with X as the multiplier of the equality.
  void step() {
    const double inv_sigma = 1.0 / sigma_;
    // y = (A A^T)^{-1} (A(Z + J) + (A(X) - b) / sigma); A A^T = diag(2, ..., 2, n).
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [i, j] = edges_[e];
      y_[e] = z_(i, j) + 1.0 + x_(i, j) * inv_sigma;
    }
    t_ = (z_.trace() + static_cast<double>(n_) + (x_.trace() - 1.0) * inv_sigma) /
         static_cast<double>(n_);

    // A^T y
    SymMatrix aty(n_);
    for (std::size_t i = 0; i < n_; ++i) aty.set(i, i, t_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      aty.set(edges_[e].first, edges_[e].second, y_[e]);

    // W = V - J - X / sigma with the relaxed V = a A^T y + (1 - a)(Z + J).
    const double a = options_.relaxation;
    SymMatrix w(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        const double v = a * aty(i, j) + (1.0 - a) * (z_(i, j) + 1.0);
        w.set(i, j, v - 1.0 - x_(i, j) * inv_sigma);
      }

    Split parts = split_by_sign(w, split_eigen_);
    SymMatrix x_new(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) x_new.set(i, j, -sigma_ * parts.negative(i, j));

    z_ = std::move(parts.positive);
    x_ = std::move(x_new);
  }

  double primal_residual() const {
    double r = (x_.trace() - 1.0) * (x_.trace() - 1.0);
    for (const auto& [i, j] : edges_) r += 4.0 * x_(i, j) * x_(i, j);
    return std::sqrt(r);
  }

  // Balances the two halves of the certified gap, using <J, X> of the raw
  // iterate as the estimate of theta. Small sigma favours primal feasibility
  // (which the repair pays for), large sigma the dual.
  void adapt_penalty(const ThetaResult& r) {
    const double raw = x_.sum();
    const double primal_loss = std::max(raw - repaired_value_, 0.0);
    const double dual_loss = std::max(r.dual_value - raw, 0.0);
    if (primal_loss > 2.0 * dual_loss)
      sigma_ /= 1.1;
    else if (dual_loss > 2.0 * primal_loss)
      sigma_ *= 1.1;
    sigma_ = std::clamp(sigma_, 1e-8, 1e8);
  }

  // Makes the iterate exactly feasible: zero the edge entries, shift by the
  // most negative eigenvalue and renormalise the trace. <J, X> of the result
  // is then a lower bound on theta.
  SymMatrix repaired_primal() {
    SymMatrix x = x_;
    for (const auto& [i, j] : edges_) x.set(i, j, 0.0);
    const double shift = std::max(0.0, -repair_eigen_(x).values.front());
    for (std::size_t i = 0; i < n_; ++i) x.set(i, i, x(i, i) + shift);
    const double tr = x.trace();
    if (tr <= 0.0) {
      SymMatrix fallback(n_);
      for (std::size_t i = 0; i < n_; ++i) fallback.set(i, i, 1.0 / static_cast<double>(n_));
      return fallback;
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) x.set(i, j, x(i, j) / tr);
    return x;
  }

  ThetaResult snapshot(std::size_t iterations) {
    ThetaResult r;
    r.primal_residual = primal_residual();
    r.primal = repaired_primal();
    r.value = r.primal.sum();
    repaired_value_ = r.value;
    if (stable_.sum() > r.value) {
      r.primal = stable_;
      r.value = stable_.sum();
    }
    r.edge_multipliers = y_;
    r.iterations = iterations;
    SymMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) m.set(i, j, 1.0);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      m.set(edges_[e].first, edges_[e].second, 1.0 - y_[e]);
    r.dual_value = dual_eigen_(m).values.back();
    r.gap = std::abs(r.value - r.dual_value);
    return r;
  }

  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  ThetaOptions options_;
  SymMatrix x_;
  SymMatrix z_;
  SymMatrix stable_;
  WarmEigen split_eigen_;
  WarmEigen repair_eigen_;
  WarmEigen dual_eigen_;
  double repaired_value_ = 0.0;
  std::vector<double> y_;
  double t_ = 0.0;
  double sigma_ = 1.0;
};

}  // namespace

ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options) {
  if (g.size() > kMaxThetaVertices)
    throw SizeLimitError("theta limited to " + std::to_string(kMaxThetaVertices) + " vertices");
  if (!(options.tol >= 1e-9)) throw std::invalid_argument("theta tolerance must be >= 1e-9");
  if (!(options.relaxation > 0.0 && options.relaxation < 2.0))
    throw std::invalid_argument("relaxation factor must lie in (0, 2)");
  if (options.check_interval == 0) throw std::invalid_argument("check interval must be positive");
  if (g.size() == 0) return ThetaResult{};
  BoundaryPointSolver solver(g, options);
  return solver.run();
}

double odd_cycle_theta(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd cycle length must be odd and >= 3");
  const double c = std::cos(std::numbers::pi / static_cast<double>(n));
  return static_cast<double>(n) * c / (1.0 + c);
}

PrimalCheck verify_primal_certificate(const Graph& g, const SymMatrix& x, double tol) {
  PrimalCheck check;
  if (x.order() != g.size()) return check;
  check.min_eigenvalue = min_eigenvalue(x);
  check.trace_error = std::abs(x.trace() - 1.0);
  for (const auto& [i, j] : g.edges())
    check.max_edge_entry = std::max(check.max_edge_entry, std::abs(x(i, j)));
  check.objective = x.sum();
  check.ok = check.min_eigenvalue >= -tol && check.trace_error <= tol && check.max_edge_entry <= tol;
  return check;
}

double dual_bound(const Graph& g, const std::vector<double>& edge_multipliers) {
  const auto edges = g.edges();
  if (edge_multipliers.size() != edges.size())
    throw std::invalid_argument("one multiplier per edge expected");
  SymMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) m.set(i, j, 1.0);
  for (std::size_t e = 0; e < edges.size(); ++e)
    m.set(edges[e].first, edges[e].second, 1.0 - edge_multipliers[e]);
  return max_eigenvalue(m);
}

}  // namespace excl
