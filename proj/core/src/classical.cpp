#include "exclusivity/classical.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "exclusivity/cliques.hpp"

namespace excl {

bool DeterministicAssignment::satisfies(const Event& e) const {
  for (const auto& a : e.assignments()) {
    auto v = values.value(a.observable);
    if (!v || *v != a.outcome) return false;
  }
  return true;
}

namespace {

// Outcomes packed one bit per declared observable (1 = +).
struct CompiledScenario {
  std::vector<std::string> names;
  std::vector<std::size_t> base_bits;
  struct Rule {
    std::size_t target;
    std::size_t first;
    std::size_t second;
    const DerivedObservable* derived;
  };
  std::vector<Rule> rules;

  explicit CompiledScenario(const Scenario& scenario) {
    if (scenario.observables().size() > 64)
      throw SizeLimitError("more than 64 declared observables");
    for (const auto& o : scenario.observables()) names.push_back(o.name);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (const auto* d = scenario.find_derived(names[i]))
        rules.push_back({i, index(d->first), index(d->second), d});
      else
        base_bits.push_back(i);
    }
  }

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw ScenarioError("undeclared observable '" + name + "'");
  }

  // Derived observables are declared after their arguments, so one pass in
  // declaration order evaluates every rule.
  std::uint64_t evaluate(std::uint64_t mask) const {
    std::uint64_t plus = 0;
    for (std::size_t k = 0; k < base_bits.size(); ++k)
      if (!((mask >> k) & 1)) plus |= std::uint64_t{1} << base_bits[k];
    for (const auto& r : rules) {
      const auto a = (plus >> r.first) & 1 ? Outcome::Plus : Outcome::Minus;
      const auto b = (plus >> r.second) & 1 ? Outcome::Plus : Outcome::Minus;
      if (r.derived->apply(a, b) == Outcome::Plus) plus |= std::uint64_t{1} << r.target;
    }
    return plus;
  }

  std::pair<std::uint64_t, std::uint64_t> compile(const Event& e) const {
    std::uint64_t care = 0;
    std::uint64_t want = 0;
    for (const auto& a : e.assignments()) {
      const auto bit = std::uint64_t{1} << index(a.observable);
      care |= bit;
      if (a.outcome == Outcome::Plus) want |= bit;
    }
    return {care, want};
  }
};

}  // namespace

DeterministicResult deterministic_max(std::span<const Event> events, const Scenario& scenario) {
  const auto base = scenario.base_observables();
  if (base.size() > kMaxAssignmentObservables)
    throw SizeLimitError("scenario has " + std::to_string(base.size()) +
                         " base observables; limit is " +
                         std::to_string(kMaxAssignmentObservables));
  for (const auto& e : events) scenario.validate(e);

  const CompiledScenario compiled(scenario);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  masks.reserve(events.size());
  for (const auto& e : events) masks.push_back(compiled.compile(e));

  std::size_t best_count = 0;
  std::uint64_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << base.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const std::uint64_t plus = compiled.evaluate(mask);
    std::size_t count = 0;
    for (const auto& [care, want] : masks) count += (plus & care) == want;
    if (count > best_count) {
      best_count = count;
      best_mask = mask;
    }
  }

  std::vector<Assignment> values;
  for (std::size_t k = 0; k < base.size(); ++k)
    values.push_back({base[k].name, (best_mask >> k) & 1 ? Outcome::Minus : Outcome::Plus});
  DeterministicResult best;
  best.value = best_count;
  best.witness = DeterministicAssignment{scenario.close(Event(std::move(values)))};
  for (std::size_t i = 0; i < events.size(); ++i)
    if (best.witness.satisfies(events[i])) best.satisfied.push_back(i);
  return best;
}

LpProblem kolmogorov_problem(const Graph& g) {
  LpProblem p;
  p.variables = g.size();
  for (const auto& [i, j] : g.edges()) p.constraints.push_back({i, j});
  return p;
}

LpProblem clique_problem(const Graph& g) {
  LpProblem p;
  p.variables = g.size();
  for (const auto& clique : enumerate_maximal_cliques(g))
    p.constraints.emplace_back(clique.begin(), clique.end());
  return p;
}

Rational kolmogorov_max(const Graph& g) { return lp_max(kolmogorov_problem(g)).value; }

Rational clique_lp_max(const Graph& g) { return lp_max(clique_problem(g)).value; }

double correlator_from_probs(double p_pp, double p_pm, double p_mp, double p_mm) {
  for (double p : {p_pp, p_pm, p_mp, p_mm})
    if (p < 0) throw std::domain_error("negative probability");
  if (p_pp + p_pm + p_mp + p_mm > 1 + 1e-9)
    throw std::domain_error("joint probabilities sum above 1");
  return p_pp - p_pm - p_mp + p_mm;
}

}  // namespace excl
