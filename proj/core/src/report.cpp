#include "exclusivity/report.hpp"

#include "exclusivity/e_verifier.hpp"
#include "exclusivity/builtin_scenarios.hpp"

namespace excl {

std::vector<std::string> BoundReport::violations(double tol) const {
  std::vector<std::string> out;
  const Rational det(static_cast<long long>(deterministic.value));
  if (det > clique_lp.value) out.push_back("deterministic bound exceeds clique LP");
  if (clique_lp.value > kolmogorov.value) out.push_back("clique LP exceeds Kolmogorov LP");
  if (static_cast<double>(deterministic.value) > theta.value + tol)
    out.push_back("deterministic bound exceeds theta");
  if (deterministic.value > independence.size)
    out.push_back("deterministic bound exceeds independence number");
  return out;
}

BoundReport compute_bounds(const Scenario& scenario, double tol) {
  const auto events = scenario.event_list();
  const Graph g = build_exclusivity_graph(scenario);
  BoundReport r;
  r.scenario = scenario.name();
  r.events = events.size();
  r.edges = g.edge_count();
  r.deterministic = deterministic_max(events, scenario);
  r.independence = max_independent_set(g);
  r.kolmogorov = lp_max(kolmogorov_problem(g));
  r.clique_lp = lp_max(clique_problem(g));
  ThetaOptions opts;
  opts.tol = tol;
  r.theta = lovasz_theta(g, opts);

  if (events == kcbs_events()) {
    const auto t = verify_kcbs();
    if (t.ok()) r.e_principle = t.bound->upper;
    Conversion c{"kappa", kappa_from_s(static_cast<double>(r.deterministic.value),
                                       static_cast<double>(r.deterministic.value)),
                 kappa_from_s(r.theta.value, r.theta.value), std::nullopt};
    if (r.e_principle) c.e_principle = kappa_from_s(*r.e_principle, *r.e_principle);
    r.conversion = c;
  } else if (events == chsh_events()) {
    const auto t = verify_chsh();
    if (t.ok()) r.e_principle = t.bound->upper;
    Conversion c{"beta", beta_from_s(static_cast<double>(r.deterministic.value)),
                 beta_from_s(r.theta.value), std::nullopt};
    if (r.e_principle) c.e_principle = beta_from_s(*r.e_principle);
    r.conversion = c;
  } else if (events == specker_triangle_events()) {
    const auto t = verify_specker();
    if (t.ok()) r.e_principle = static_cast<double>(t.sum->bound);
  }
  return r;
}

}  // namespace excl
