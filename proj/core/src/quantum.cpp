#include "exclusivity/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exclusivity/classical.hpp"
#include "exclusivity/builtin_scenarios.hpp"

namespace excl {

double ProjectorModel::probability(std::size_t i) const {
  const double a = dot(state, vectors.at(i));
  return a * a;
}

std::vector<double> ProjectorModel::probabilities() const {
  std::vector<double> p;
  for (std::size_t i = 0; i < vectors.size(); ++i) p.push_back(probability(i));
  return p;
}

ProjectorModel projector_model(std::span<const Event> events,
                               const std::map<std::string, Matrix>& observables,
                               std::vector<double> state, double tol) {
  const std::size_t d = state.size();
  ProjectorModel model;
  model.state = std::move(state);
  for (const auto& e : events) {
    std::vector<Matrix> factors;
    for (const auto& a : e.assignments()) {
      auto it = observables.find(a.observable);
      if (it == observables.end())
        throw std::invalid_argument("no operator for observable '" + a.observable + "'");
      const double s = to_int(a.outcome);
      factors.push_back((Matrix::identity(d) + s * it->second) * 0.5);
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        if ((factors[i] * factors[j] - factors[j] * factors[i]).max_abs() > tol)
          throw std::domain_error("measurements in " + to_string(e) + " do not commute");
    Matrix p = Matrix::identity(d);
    for (const auto& f : factors) p = p * f;
    if (std::abs(p.trace() - 1.0) > tol || (p * p - p).max_abs() > tol)
      throw std::domain_error("projector of " + to_string(e) + " is not rank 1");
    // Any nonzero column of a rank-1 projector spans its range.
    std::size_t best = 0;
    for (std::size_t c = 1; c < d; ++c)
      if (p(c, c) > p(best, best)) best = c;
    std::vector<double> v(d);
    const double scale = 1.0 / std::sqrt(p(best, best));
    for (std::size_t r = 0; r < d; ++r) v[r] = p(r, best) * scale;
    model.labels.push_back(to_string(e));
    model.vectors.push_back(std::move(v));
  }
  return model;
}

std::vector<OrthogonalityResidual> orthogonality_residuals(const ProjectorModel& model,
                                                           const Graph& g) {
  std::vector<OrthogonalityResidual> out;
  for (const auto& [i, j] : g.edges())
    out.push_back({i, j, std::abs(dot(model.vectors.at(i), model.vectors.at(j)))});
  return out;
}

namespace {

void append(std::vector<OrthogonalityResidual>& to, std::vector<OrthogonalityResidual> from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

KcbsRealization kcbs_realization() {
  using std::numbers::pi;
  KcbsRealization r;
  const double c = std::cos(pi / 5.0);
  r.cos_theta = std::sqrt(c / (1.0 + c));
  const double sin_theta = std::sqrt(1.0 - r.cos_theta * r.cos_theta);
  for (int j = 1; j <= 5; ++j) {
    const double phi = 4.0 * pi * j / 5.0;
    r.umbrella.push_back({r.cos_theta, sin_theta * std::cos(phi), sin_theta * std::sin(phi)});
  }
  for (int j = 1; j <= 5; ++j) {
    const auto& v = r.umbrella[j - 1];
    Matrix a = Matrix::identity(3) - 2.0 * Matrix::outer(v, v);
    if (j % 2) a *= -1.0;
    r.observables.emplace("A" + std::to_string(j), std::move(a));
  }
  for (std::size_t j = 0; j < 5; ++j)
    r.adjacent_residuals[j] = std::abs(dot(r.umbrella[j], r.umbrella[(j + 1) % 5]));

  const std::vector<double> psi{1.0, 0.0, 0.0};
  const auto events = kcbs_events();
  std::vector<Event> negated;
  for (const auto& e : events) negated.push_back(negate_event(e));
  r.model = projector_model(events, r.observables, psi);
  r.negated = projector_model(negated, r.observables, psi);
  for (double p : r.model.probabilities()) r.s_value += p;
  for (double p : r.negated.probabilities()) r.s_prime_value += p;
  r.kappa = kappa_from_s(r.s_value, r.s_prime_value);

  const Scenario sc = kcbs_scenario();
  append(r.exclusive_residuals,
         orthogonality_residuals(r.model, build_exclusivity_graph(events, sc)));
  append(r.exclusive_residuals,
         orthogonality_residuals(r.negated, build_exclusivity_graph(negated, sc)));
  return r;
}

ChshRealization chsh_realization() {
  using std::numbers::pi;
  ChshRealization r;
  r.angles = {0.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0};
  r.qubit = {0, 1, 0, 1};
  Matrix z(2, 2), x(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const Matrix id = Matrix::identity(2);
  for (std::size_t j = 0; j < 4; ++j) {
    const Matrix local = std::cos(r.angles[j]) * z + std::sin(r.angles[j]) * x;
    r.observables.emplace("A" + std::to_string(j + 1),
                          r.qubit[j] == 0 ? kron(local, id) : kron(id, local));
  }
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<double> phi_plus{h, 0.0, 0.0, h};

  const auto events = chsh_events();
  r.model = projector_model(events, r.observables, phi_plus);
  for (double p : r.model.probabilities()) r.s_value += p;

  const std::array<std::pair<int, int>, 4> pairs{{{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string a = "A" + std::to_string(pairs[k].first);
    const std::string b = "A" + std::to_string(pairs[k].second);
    std::vector<Event> quad;
    for (Outcome s : {Outcome::Plus, Outcome::Minus})
      for (Outcome t : {Outcome::Plus, Outcome::Minus}) quad.push_back(Event{{a, s}, {b, t}});
    const ProjectorModel m = projector_model(quad, r.observables, phi_plus);
    for (std::size_t q = 0; q < 4; ++q) r.joint[k][q] = m.probability(q);
    r.correlators[k] = correlator_from_probs(r.joint[k][0], r.joint[k][1], r.joint[k][2],
                                             r.joint[k][3]);
  }
  r.beta = r.correlators[0] + r.correlators[1] + r.correlators[2] - r.correlators[3];
  r.exclusive_residuals =
      orthogonality_residuals(r.model, build_exclusivity_graph(events, chsh_scenario()));
  return r;
}

}  // namespace excl
