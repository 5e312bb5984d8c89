#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "exclusivity/classical.hpp"
#include "exclusivity/cliques.hpp"
#include "exclusivity/builtin_scenarios.hpp"
#include "oracles.hpp"

using namespace excl;

TEST(Deterministic, ReferenceValues) {
  const auto k = deterministic_max(kcbs_events(), kcbs_scenario());
  EXPECT_EQ(k.value, 2u);
  EXPECT_EQ(k.satisfied.size(), 2u);
  const auto c = deterministic_max(chsh_events(), chsh_scenario());
  EXPECT_EQ(c.value, 3u);
  EXPECT_EQ(deterministic_max(specker_triangle_events(), specker_scenario()).value, 1u);
}

TEST(Deterministic, WitnessIsTotalAndAchieves) {
  const auto events = chsh_events();
  const auto r = deterministic_max(events, chsh_scenario());
  EXPECT_EQ(r.witness.values.size(), 4u);
  std::size_t count = 0;
  for (const auto& e : events) count += r.witness.satisfies(e);
  EXPECT_EQ(count, r.value);
}

TEST(Deterministic, DerivedRulesAreApplied) {
  Scenario s("c");
  s.declare("A1", Copy::A);
  s.declare("B1", Copy::B);
  s.declare_derived(DerivedObservable::equality("C11", "A1", "B1"));
  using O = Outcome;
  // C11- together with A1+ and B1+ is impossible for a deterministic assignment.
  const std::vector<Event> events{Event{{"A1", O::Plus}, {"B1", O::Plus}}, Event{{"C11", O::Minus}}};
  const auto r = deterministic_max(events, s);
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.witness.values.size(), 3u);
}

TEST(Deterministic, NeverExceedsIndependenceNumber) {
  for (const char* n : {"kcbs", "chsh", "specker"}) {
    const Scenario s = builtin_scenario(n);
    const auto d = deterministic_max(s.event_list(), s);
    EXPECT_LE(d.value, max_independent_set(build_exclusivity_graph(s)).size) << n;
    // The satisfied events form an independent set.
    const Graph g = build_exclusivity_graph(s);
    EXPECT_TRUE(is_independent(g, VertexSet(d.satisfied)));
  }
}

TEST(Deterministic, SizeLimit) {
  Scenario s("big");
  for (int i = 0; i < 25; ++i) s.declare("X" + std::to_string(i), Copy::A);
  EXPECT_THROW(deterministic_max(std::vector<Event>{}, s), SizeLimitError);
}

TEST(Lp, ReferenceExamples) {
  LpProblem edges{3, {{0, 1}, {1, 2}, {0, 2}}, {}};
  EXPECT_EQ(lp_max(edges).value, Rational(3, 2));
  LpProblem clique{3, {{0, 1, 2}}, {}};
  EXPECT_EQ(lp_max(clique).value, Rational(1));

  const auto c5 = lp_max(kolmogorov_problem(cycle_graph(5)));
  EXPECT_EQ(c5.value, Rational(5, 2));
  for (const auto& x : c5.x) EXPECT_EQ(x, Rational(1, 2));
}

TEST(Lp, GraphBounds) {
  EXPECT_EQ(kolmogorov_max(complete_graph(3)), Rational(3, 2));
  EXPECT_EQ(kolmogorov_max(cycle_graph(5)), Rational(5, 2));
  EXPECT_EQ(kolmogorov_max(Graph(4)), Rational(4));
  EXPECT_EQ(clique_lp_max(complete_graph(3)), Rational(1));
  EXPECT_EQ(clique_lp_max(cycle_graph(5)), Rational(5, 2));
  EXPECT_EQ(clique_lp_max(complete_graph(4)), Rational(1));
}

TEST(Lp, Validation) {
  EXPECT_THROW(lp_max(LpProblem{2, {{}}, {}}), LpError);
  EXPECT_THROW(lp_max(LpProblem{2, {{0, 2}}, {}}), LpError);
  EXPECT_THROW(lp_max(LpProblem{2, {{0, 0}}, {}}), LpError);
  EXPECT_THROW(lp_max(LpProblem{2, {}, {Rational(1)}}), LpError);
  EXPECT_THROW(lp_max(LpProblem{201, {}, {}}), SizeLimitError);
}

TEST(Lp, WeightedObjective) {
  // max 2x + 3y + z, x + y <= 1, y + z <= 1 -> x = z = 1, y = 0 gives 3; y = 1 gives 3.
  LpProblem p{3, {{0, 1}, {1, 2}}, {Rational(2), Rational(3), Rational(1)}};
  const auto s = lp_max(p);
  EXPECT_EQ(s.value, Rational(3));
  EXPECT_TRUE(is_feasible(p, s.x));
  EXPECT_EQ(objective_value(p, s.x), s.value);
}

TEST(Lp, MatchesVertexEnumeration) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 120; ++t) {
    LpProblem p;
    p.variables = 1 + rng() % 6;
    const std::size_t m = rng() % 6;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < p.variables; ++i)
        if (rng() % 2) s.push_back(i);
      if (s.empty()) s.push_back(rng() % p.variables);
      p.constraints.push_back(s);
    }
    if (rng() % 2)
      for (std::size_t i = 0; i < p.variables; ++i)
        p.objective.emplace_back(static_cast<long long>(rng() % 7) - 2, 1 + static_cast<long long>(rng() % 3));
    const auto s = lp_max(p);
    EXPECT_EQ(s.value, oracle::lp_by_vertices(p)) << "case " << t;
    EXPECT_TRUE(is_feasible(p, s.x));
    EXPECT_EQ(objective_value(p, s.x), s.value);
  }
}

TEST(Lp, CliqueNeverAboveKolmogorov) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 9, 0.45);
    const auto k = lp_max(kolmogorov_problem(g));
    const auto c = lp_max(clique_problem(g));
    EXPECT_LE(c.value, k.value);
    EXPECT_GE(c.value, Rational(static_cast<long long>(oracle::alpha(g))));
    EXPECT_TRUE(is_feasible(kolmogorov_problem(g), k.x));
    EXPECT_TRUE(is_feasible(clique_problem(g), c.x));
  }
}

TEST(Conversions, ReferenceValues) {
  const double s5 = std::sqrt(5.0);
  EXPECT_NEAR(kappa_from_s(s5, s5), 4 * s5 - 5, 1e-12);
  EXPECT_NEAR(kappa_from_s(s5, s5), 3.9442719, 1e-7);
  EXPECT_NEAR(beta_from_s(2 + std::sqrt(2.0)), 2.8284271, 1e-7);
  EXPECT_EQ(kappa_from_s(2, 2), 3);
  EXPECT_EQ(beta_from_s(3), 2);
  EXPECT_EQ(beta_from_s(static_cast<double>(deterministic_max(chsh_events(), chsh_scenario()).value)), 2);
}

TEST(Conversions, Correlator) {
  EXPECT_EQ(correlator_from_probs(1, 0, 0, 0), 1);
  EXPECT_EQ(correlator_from_probs(0, 0.5, 0.5, 0), -1);
  EXPECT_EQ(correlator_from_probs(0.25, 0.25, 0.25, 0.25), 0);
  EXPECT_NEAR(correlator_from_probs(0.4, 0.1, 0.2, 0.3), 2 * (0.4 + 0.3) - 1, 1e-15);
  EXPECT_THROW(correlator_from_probs(-0.1, 0.5, 0.3, 0.3), std::domain_error);
  EXPECT_THROW(correlator_from_probs(0.5, 0.5, 0.5, 0), std::domain_error);
}
