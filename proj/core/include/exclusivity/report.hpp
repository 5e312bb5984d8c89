#pragma once

// All bounds of one scenario's event sum in one place.

#include <optional>
#include <string>
#include <vector>

#include "exclusivity/classical.hpp"
#include "exclusivity/cliques.hpp"
#include "exclusivity/graph.hpp"
#include "exclusivity/lp.hpp"
#include "exclusivity/scenario.hpp"
#include "exclusivity/theta.hpp"

namespace excl {

struct Conversion {
  std::string name;  ///< "kappa" or "beta"
  double classical = 0.0;
  double quantum = 0.0;
  std::optional<double> e_principle;
};

struct BoundReport {
  std::string scenario;
  std::size_t events = 0;
  std::size_t edges = 0;
  DeterministicResult deterministic;
  IndependentSetResult independence;
  LpSolution kolmogorov;
  LpSolution clique_lp;
  ThetaResult theta;
  /// Present when the event list is one with a verified derivation.
  std::optional<double> e_principle;
  std::optional<Conversion> conversion;

  /// Chain violations: deterministic <= clique LP <= Kolmogorov and
  /// deterministic <= theta + tol. Empty when consistent.
  std::vector<std::string> violations(double tol) const;
};

/// Throws whatever the underlying computations throw (size limits,
/// ThetaConvergenceError, ScenarioError).
BoundReport compute_bounds(const Scenario& scenario, double tol = 1e-7);

}  // namespace excl
