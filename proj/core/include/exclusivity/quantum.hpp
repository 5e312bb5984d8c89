#pragma once

// Explicit real quantum models reaching the KCBS and CHSH maxima.

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "exclusivity/graph.hpp"
#include "exclusivity/linalg.hpp"
#include "exclusivity/scenario.hpp"

namespace excl {

/// A pure state and one rank-1 projector (as a unit vector) per event.
struct ProjectorModel {
  std::vector<double> state;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> vectors;

  /// |<state|v_i>|^2
  double probability(std::size_t i) const;
  std::vector<double> probabilities() const;
};

/// Builds the projector of each event as the product of the spectral
/// projectors (I +- A)/2 of its assignments. Throws std::domain_error if two
/// of those projectors do not commute or the product is not rank 1.
ProjectorModel projector_model(std::span<const Event> events,
                               const std::map<std::string, Matrix>& observables,
                               std::vector<double> state, double tol = 1e-10);

struct OrthogonalityResidual {
  std::size_t first = 0;
  std::size_t second = 0;
  double residual = 0.0;  ///< |<v_first|v_second>|
};

/// One entry per edge of `g`, in Graph::edges() order.
std::vector<OrthogonalityResidual> orthogonality_residuals(const ProjectorModel& model,
                                                           const Graph& g);

struct KcbsRealization {
  double cos_theta = 0.0;
  std::vector<std::vector<double>> umbrella;  ///< v_1 .. v_5
  std::map<std::string, Matrix> observables;  ///< A_j = (-1)^j (I - 2 |v_j><v_j|)
  ProjectorModel model;                       ///< events of S_KCBS
  ProjectorModel negated;                     ///< events of S'_KCBS
  double s_value = 0.0;
  double s_prime_value = 0.0;
  double kappa = 0.0;
  /// |<v_j|v_{j+1}>| for j = 1..5 (cyclically).
  std::array<double, 5> adjacent_residuals{};
  /// Over the exclusivity edges of both event lists.
  std::vector<OrthogonalityResidual> exclusive_residuals;
};

/// Qutrit state (1,0,0) and umbrella vectors
/// v_j = (cos t, sin t cos(4 pi j / 5), sin t sin(4 pi j / 5)), cos^2 t = cos(pi/5) / (1 + cos(pi/5)).
KcbsRealization kcbs_realization();

struct ChshRealization {
  std::array<double, 4> angles{};  ///< A_j = cos(a_j) Z + sin(a_j) X
  std::array<int, 4> qubit{};      ///< 0 or 1
  std::map<std::string, Matrix> observables;
  ProjectorModel model;  ///< events of S_CHSH
  /// <A1A2>, <A2A3>, <A3A4>, <A4A1>
  std::array<double, 4> correlators{};
  /// (p++, p+-, p-+, p--) for the same four pairs.
  std::array<std::array<double, 4>, 4> joint{};
  double beta = 0.0;
  double s_value = 0.0;  ///< sum of the S_CHSH event probabilities
  std::vector<OrthogonalityResidual> exclusive_residuals;
};

/// (|00> + |11>)/sqrt(2); A1, A3 on the first qubit and A2, A4 on the second,
/// at angles 0, pi/4, pi/2, 3 pi/4.
ChshRealization chsh_realization();

}  // namespace excl
