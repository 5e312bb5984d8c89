#include "exclusivity/scenario.hpp"

#include <algorithm>

namespace excl {

std::string_view to_string(Copy copy) noexcept {
  switch (copy) {
    case Copy::A:
      return "A";
    case Copy::B:
      return "B";
    case Copy::Shared:
      return "shared";
  }
  return "shared";
}

DerivedObservable DerivedObservable::equality(std::string name, std::string first,
                                              std::string second) {
  DerivedObservable d;
  d.id = ObservableId{std::move(name), Copy::Shared};
  d.first = std::move(first);
  d.second = std::move(second);
  // index: (a == +) * 2 + (b == +)
  d.table = {Outcome::Plus, Outcome::Minus, Outcome::Minus, Outcome::Plus};
  return d;
}

bool DerivedObservable::is_equality() const noexcept {
  return table == std::array<Outcome, 4>{Outcome::Plus, Outcome::Minus, Outcome::Minus,
                                         Outcome::Plus};
}

Event::Event(std::vector<Assignment> assignments) : assignments_(std::move(assignments)) {
  std::sort(assignments_.begin(), assignments_.end(),
            [](const Assignment& a, const Assignment& b) { return a.observable < b.observable; });
  for (std::size_t i = 1; i < assignments_.size(); ++i) {
    if (assignments_[i].observable == assignments_[i - 1].observable)
      throw ScenarioError("observable '" + assignments_[i].observable +
                          "' assigned twice in one event");
  }
}

std::optional<Outcome> Event::value(std::string_view observable) const noexcept {
  auto it = std::lower_bound(
      assignments_.begin(), assignments_.end(), observable,
      [](const Assignment& a, std::string_view name) { return a.observable < name; });
  if (it == assignments_.end() || it->observable != observable) return std::nullopt;
  return it->outcome;
}

Event Event::merged(const Event& other) const {
  std::vector<Assignment> out(assignments_.begin(), assignments_.end());
  for (const auto& a : other.assignments_) {
    if (auto v = value(a.observable)) {
      if (*v != a.outcome)
        throw ScenarioError("cannot merge events disagreeing on '" + a.observable + "'");
      continue;
    }
    out.push_back(a);
  }
  return Event(std::move(out));
}

std::string to_string(const Event& e) {
  std::string s = "(";
  bool first = true;
  for (const auto& a : e.assignments()) {
    if (!first) s += ',';
    first = false;
    s += a.observable;
    s += sign_char(a.outcome);
  }
  s += ')';
  return s;
}

Event negate_event(const Event& e) {
  std::vector<Assignment> out;
  out.reserve(e.size());
  for (const auto& a : e.assignments()) out.push_back({a.observable, -a.outcome});
  return Event(std::move(out));
}

void Scenario::declare(ObservableId id) {
  if (id.name.empty()) throw ScenarioError("empty observable name");
  if (is_declared(id.name)) throw ScenarioError("observable '" + id.name + "' declared twice");
  observables_.push_back(std::move(id));
}

void Scenario::declare_derived(DerivedObservable derived) {
  for (const auto* arg : {&derived.first, &derived.second}) {
    if (!is_declared(*arg))
      throw ScenarioError("derived observable '" + derived.id.name +
                          "' refers to undeclared '" + *arg + "'");
  }
  if (derived.first == derived.second)
    throw ScenarioError("derived observable '" + derived.id.name + "' needs two distinct arguments");
  declare(derived.id);
  derived_.push_back(std::move(derived));
}

void Scenario::add_event(std::string label, Event event) {
  validate(event);
  events_.push_back({std::move(label), std::move(event)});
}

std::vector<Event> Scenario::event_list() const {
  std::vector<Event> out;
  out.reserve(events_.size());
  for (const auto& le : events_) out.push_back(le.event);
  return out;
}

const ObservableId* Scenario::find(std::string_view name) const noexcept {
  for (const auto& o : observables_)
    if (o.name == name) return &o;
  return nullptr;
}

const DerivedObservable* Scenario::find_derived(std::string_view name) const noexcept {
  for (const auto& d : derived_)
    if (d.id.name == name) return &d;
  return nullptr;
}

std::vector<ObservableId> Scenario::base_observables() const {
  std::vector<ObservableId> out;
  for (const auto& o : observables_)
    if (!is_derived(o.name)) out.push_back(o);
  return out;
}

void Scenario::validate(const Event& e) const { (void)close(e); }

Event Scenario::close(const Event& e) const {
  for (const auto& a : e.assignments()) {
    if (!is_declared(a.observable))
      throw ScenarioError("undeclared observable '" + a.observable + "'");
  }
  std::vector<Assignment> current(e.assignments().begin(), e.assignments().end());
  Event closed = e;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& d : derived_) {
      auto x = closed.value(d.first);
      auto y = closed.value(d.second);
      if (!x || !y) continue;
      const Outcome implied = d.apply(*x, *y);
      if (auto assigned = closed.value(d.id.name)) {
        if (*assigned != implied)
          throw ScenarioError("event " + to_string(e) + " contradicts the rule for '" +
                              d.id.name + "'");
        continue;
      }
      current.push_back({d.id.name, implied});
      closed = Event(current);
      changed = true;
    }
  }
  return closed;
}

std::optional<std::string> exclusivity_witness(const Event& e1, const Event& e2,
                                               const Scenario& scenario) {
  const Event c1 = scenario.close(e1);
  const Event c2 = scenario.close(e2);
  for (const auto& a : c1.assignments()) {
    if (auto v = c2.value(a.observable); v && *v != a.outcome) return a.observable;
  }
  return std::nullopt;
}

bool are_exclusive(const Event& e1, const Event& e2, const Scenario& scenario) {
  return exclusivity_witness(e1, e2, scenario).has_value();
}

}  // namespace excl
