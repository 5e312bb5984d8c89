#pragma once

// The concrete event lists of the KCBS, CHSH and Specker-triangle sums.

#include <string_view>
#include <vector>

#include "exclusivity/scenario.hpp"

namespace excl {

/// S_KCBS: (A1+,A2+), (A2-,A3-), (A3+,A4+), (A4-,A5-), (A5+,A1-).
std::vector<Event> kcbs_events();

/// S_CHSH, listing order: (A1+,A2+), (A1-,A2-), (A2+,A3+), (A2-,A3-),
/// (A3+,A4+), (A3-,A4-), (A4+,A1-), (A4-,A1+).
std::vector<Event> chsh_events();

/// The eight events whose probabilities sum to 4 - S_CHSH.
std::vector<Event> chsh_complement_events();

/// (A1+,A2+), (A2-,A3-), (A3+,A1-).
std::vector<Event> specker_triangle_events();

/// Scenarios carrying the lists above as labelled events; all observables are
/// in copy A.
Scenario kcbs_scenario();
Scenario chsh_scenario();
Scenario specker_scenario();

bool is_builtin_scenario(std::string_view name) noexcept;
/// "kcbs", "chsh" or "specker"; throws ScenarioError otherwise.
Scenario builtin_scenario(std::string_view name);

}  // namespace excl
