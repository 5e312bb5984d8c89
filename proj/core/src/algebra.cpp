#include "exclusivity/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace excl {

std::string to_string(const AtomicProb& p) { return "P" + to_string(p.event); }

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += to_string(m[i]);
  }
  return out;
}

void LinearCombo::add(Monomial factors, std::int64_t coefficient) {
  if (factors.empty()) throw std::invalid_argument("empty monomial");
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i].copy == factors[i - 1].copy)
      throw std::invalid_argument("two factors from copy " +
                                  std::string(to_string(factors[i].copy)));
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(factors), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void LinearCombo::add(const LinearCombo& other, std::int64_t scale) {
  for (const auto& [m, c] : other.terms_) add(m, c * scale);
}

std::vector<ProductTerm> LinearCombo::term_list() const {
  std::vector<ProductTerm> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  return out;
}

std::int64_t LinearCombo::coefficient(const Monomial& m) const {
  Monomial key = m;
  std::sort(key.begin(), key.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::string to_string(const LinearCombo& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, k] : c.terms()) {
    if (!first) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += "-";
    first = false;
    const auto mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += to_string(m);
  }
  return out;
}

Monomial factorize(const Event& e, const Scenario& scenario) {
  scenario.validate(e);
  std::vector<Assignment> parts[3];
  for (const auto& a : e.assignments()) {
    if (const auto* d = scenario.find_derived(a.observable)) {
      // Implied by the base values: the probability is unchanged by keeping it.
      if (e.assigns(d->first) && e.assigns(d->second)) continue;
    }
    const ObservableId* id = scenario.find(a.observable);
    parts[static_cast<int>(id->copy)].push_back(a);
  }
  const bool has_copy = !parts[0].empty() || !parts[1].empty();
  if (has_copy && !parts[2].empty())
    throw ScenarioError("event " + to_string(e) +
                        " mixes shared observables with copy observables");
  Monomial m;
  for (int c = 0; c < 3; ++c)
    if (!parts[c].empty()) m.push_back({Event(std::move(parts[c])), static_cast<Copy>(c)});
  if (m.empty()) throw ScenarioError("empty event has no probability factor");
  return m;
}

LinearCombo product_expansion(std::span<const Event> a, std::span<const Event> b) {
  LinearCombo out;
  for (const auto& ea : a)
    for (const auto& eb : b) out.add({{ea, Copy::A}, {eb, Copy::B}}, 1);
  return out;
}

}  // namespace excl
