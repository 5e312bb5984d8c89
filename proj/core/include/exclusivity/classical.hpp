#pragma once

// Hidden-variable and Kolmogorov bounds on sums of event probabilities, plus
// the correlator <-> probability conversions.

#include <cstddef>
#include <span>
#include <vector>

#include "exclusivity/graph.hpp"
#include "exclusivity/lp.hpp"
#include "exclusivity/scenario.hpp"

namespace excl {

inline constexpr std::size_t kMaxAssignmentObservables = 24;

/// A total outcome assignment to the base observables of a scenario, closed
/// under its derived rules.
struct DeterministicAssignment {
  Event values;
  bool satisfies(const Event& e) const;
};

struct DeterministicResult {
  std::size_t value = 0;
  DeterministicAssignment witness;
  /// Indices of the events the witness satisfies.
  std::vector<std::size_t> satisfied;
};

/// Largest number of `events` satisfied by a single global assignment,
/// found by enumerating all 2^k assignments of the scenario's k base
/// observables (first maximiser in enumeration order, observable 0 fastest,
/// + before -). Throws SizeLimitError for k > kMaxAssignmentObservables.
DeterministicResult deterministic_max(std::span<const Event> events, const Scenario& scenario);

/// One x_i + x_j <= 1 constraint per edge.
LpProblem kolmogorov_problem(const Graph& g);
/// One constraint per maximal clique.
LpProblem clique_problem(const Graph& g);

Rational kolmogorov_max(const Graph& g);
Rational clique_lp_max(const Graph& g);

/// kappa = 2 S + 2 S' - 5.
constexpr double kappa_from_s(double s, double s_prime) noexcept { return 2 * s + 2 * s_prime - 5; }
/// beta = 2 S - 4.
constexpr double beta_from_s(double s) noexcept { return 2 * s - 4; }

/// p++ - p+- - p-+ + p--. Throws std::domain_error for a negative input or a
/// total above 1 + 1e-9.
double correlator_from_probs(double p_pp, double p_pm, double p_mp, double p_mm);

}  // namespace excl
