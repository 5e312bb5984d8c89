#include "exclusivity/builtin_scenarios.hpp"

#include <string>
#include <utility>

namespace excl {
namespace {

constexpr Outcome P = Outcome::Plus;
constexpr Outcome M = Outcome::Minus;

struct PairSpec {
  int first;
  Outcome first_outcome;
  int second;
  Outcome second_outcome;
};

std::string obs(int index) { return "A" + std::to_string(index); }

Event make(const PairSpec& s) {
  return Event{{obs(s.first), s.first_outcome}, {obs(s.second), s.second_outcome}};
}

// Label in listing order, e.g. "A5+A1-".
std::string label(const PairSpec& s) {
  return obs(s.first) + sign_char(s.first_outcome) + obs(s.second) +
         sign_char(s.second_outcome);
}

constexpr PairSpec kKcbs[] = {
    {1, P, 2, P}, {2, M, 3, M}, {3, P, 4, P}, {4, M, 5, M}, {5, P, 1, M},
};

constexpr PairSpec kChsh[] = {
    {1, P, 2, P}, {1, M, 2, M}, {2, P, 3, P}, {2, M, 3, M},
    {3, P, 4, P}, {3, M, 4, M}, {4, P, 1, M}, {4, M, 1, P},
};

constexpr PairSpec kChshComplement[] = {
    {1, P, 2, M}, {1, M, 2, P}, {2, P, 3, M}, {2, M, 3, P},
    {3, P, 4, M}, {3, M, 4, P}, {4, P, 1, P}, {4, M, 1, M},
};

constexpr PairSpec kSpecker[] = {
    {1, P, 2, P}, {2, M, 3, M}, {3, P, 1, M},
};

template <std::size_t N>
std::vector<Event> events_of(const PairSpec (&specs)[N]) {
  std::vector<Event> out;
  out.reserve(N);
  for (const auto& s : specs) out.push_back(make(s));
  return out;
}

template <std::size_t N>
Scenario scenario_of(std::string name, int observable_count, const PairSpec (&specs)[N]) {
  Scenario sc(std::move(name));
  for (int i = 1; i <= observable_count; ++i) sc.declare(obs(i), Copy::A);
  for (const auto& s : specs) sc.add_event(label(s), make(s));
  return sc;
}

}  // namespace

std::vector<Event> kcbs_events() { return events_of(kKcbs); }
std::vector<Event> chsh_events() { return events_of(kChsh); }
std::vector<Event> chsh_complement_events() { return events_of(kChshComplement); }
std::vector<Event> specker_triangle_events() { return events_of(kSpecker); }

Scenario kcbs_scenario() { return scenario_of("kcbs", 5, kKcbs); }
Scenario chsh_scenario() { return scenario_of("chsh", 4, kChsh); }
Scenario specker_scenario() { return scenario_of("specker", 3, kSpecker); }

bool is_builtin_scenario(std::string_view name) noexcept {
  return name == "kcbs" || name == "chsh" || name == "specker";
}

Scenario builtin_scenario(std::string_view name) {
  if (name == "kcbs") return kcbs_scenario();
  if (name == "chsh") return chsh_scenario();
  if (name == "specker") return specker_scenario();
  throw ScenarioError("unknown built-in scenario '" + std::string(name) + "'");
}

}  // namespace excl
