#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "exclusivity/cliques.hpp"
#include "exclusivity/e_verifier.hpp"
#include "exclusivity/builtin_scenarios.hpp"
#include "exclusivity/scenario_io.hpp"

using namespace excl;

namespace {

constexpr Outcome P = Outcome::Plus;
constexpr Outcome M = Outcome::Minus;

Event ev(const char* text) { return parse_event(text); }

std::vector<Event> b_side(const std::vector<Event>& a) {
  std::vector<Event> out;
  for (const auto& e : a) out.push_back(relabel_prefix(e, 'A', 'B'));
  return out;
}

}  // namespace

TEST(Algebra, LinearComboCanonicalAndCancels) {
  LinearCombo c;
  const AtomicProb a{ev("A1+ A2+"), Copy::A};
  const AtomicProb b{ev("B1+ B2+"), Copy::B};
  c.add({b, a}, 1);
  c.add({a, b}, 2);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.coefficient({a, b}), 3);
  c.add({a, b}, -3);
  EXPECT_TRUE(c.empty());
  EXPECT_THROW(c.add({a, a}, 1), std::invalid_argument);
  EXPECT_THROW(c.add(Monomial{}, 1), std::invalid_argument);
}

TEST(Algebra, FactorizeDropsImpliedDerivedValues) {
  const Scenario s = chsh_extended_scenario();
  const Monomial with_c = factorize(ev("A1+ A2+ B1+ B2+ C11+"), s);
  const Monomial without = factorize(ev("A1+ A2+ B1+ B2+"), s);
  EXPECT_EQ(with_c, without);
  ASSERT_EQ(without.size(), 2u);
  EXPECT_EQ(to_string(without), "P(A1+,A2+) P(B1+,B2+)");
  const Monomial c = factorize(ev("C11- C33+"), s);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].copy, Copy::Shared);
  EXPECT_THROW(factorize(ev("A1+ C33+"), s), ScenarioError);
}

TEST(TwinCompound, Examples) {
  const Scenario s = kcbs_twin_scenario();
  const Event e = twin_compound(ev("A1+ A2+"), ev("B1+ B2+"), s);
  EXPECT_EQ(e, ev("A1+ A2+ B1+ B2+"));
  EXPECT_EQ(factorize(e, s), (Monomial{{ev("A1+ A2+"), Copy::A}, {ev("B1+ B2+"), Copy::B}}));
  EXPECT_TRUE(are_exclusive(e, ev("A2- A3- B4- B5-"), s));
  EXPECT_FALSE(are_exclusive(e, ev("A3+ A4+ B3+ B4+"), s));
  EXPECT_THROW(twin_compound(ev("B1+"), ev("B2+"), s), ScenarioError);
  EXPECT_THROW(twin_compound(ev("A1+"), ev("A2+"), s), ScenarioError);
}

TEST(KcbsTwin, FirstSetMatchesListing) {
  const auto sets = kcbs_twin_sets();
  ASSERT_EQ(sets.size(), 5u);
  std::vector<Event> first;
  for (const auto& e : sets[0].events()) first.push_back(e.event);
  EXPECT_EQ(first, (std::vector<Event>{ev("A1+ A2+ B1+ B2+"), ev("A2- A3- B4- B5-"),
                                       ev("A3+ A4+ B2- B3-"), ev("A4- A5- B5+ B1-"),
                                       ev("A5+ A1- B3+ B4+")}));
  // The second listed inequality starts with P(A1+,A2+) P(B3+,B4+).
  EXPECT_EQ(sets[1].events()[0].event, ev("A1+ A2+ B3+ B4+"));
  for (const auto& s : sets) EXPECT_TRUE(s.certified()) << s.name();
}

TEST(KcbsTwin, ExactCoverAndCliques) {
  const auto a = kcbs_events();
  const auto b = b_side(a);
  const Graph c5 = cycle_graph(5);
  const Graph product = disjunctive_product(c5, c5);
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  std::set<VertexSet> parts;
  for (const auto& s : kcbs_twin_sets()) {
    std::vector<std::size_t> vertices;
    for (const auto& le : s.events()) {
      const Event& e = le.event;
      std::size_t i = 5, j = 5;
      for (std::size_t k = 0; k < 5; ++k) {
        if (e == a[k].merged(e.filtered([](const Assignment& x) { return x.observable[0] == 'B'; })))
          i = k;
        if (e == b[k].merged(e.filtered([](const Assignment& x) { return x.observable[0] == 'A'; })))
          j = k;
      }
      ASSERT_LT(i, 5u);
      ASSERT_LT(j, 5u);
      ++seen[{i, j}];
      vertices.push_back(i * 5 + j);
    }
    const VertexSet vs(vertices);
    EXPECT_TRUE(is_clique(product, vs));
    parts.insert(vs);
  }
  EXPECT_EQ(seen.size(), 25u);
  for (const auto& [k, n] : seen) EXPECT_EQ(n, 1);

  // The search finds a partition of the same shape: each part is one pair per
  // A-event, i.e. a permutation.
  const auto found = clique_partition_search(product, 5, 5);
  ASSERT_TRUE(found.has_value());
  for (const auto& part : *found) {
    std::set<std::size_t> rows, cols;
    for (auto v : part) {
      rows.insert(v / 5);
      cols.insert(v % 5);
    }
    EXPECT_EQ(rows.size(), 5u);
    EXPECT_EQ(cols.size(), 5u);
  }
}

TEST(KcbsTwin, SumIsProductExpansion) {
  const auto sets = kcbs_twin_sets();
  const InequalitySum sum = sum_inequalities(sets);
  EXPECT_EQ(sum.bound, 5);
  EXPECT_EQ(sum.lhs.size(), 25u);
  const auto a = kcbs_events();
  const auto b = b_side(a);
  EXPECT_TRUE(matches_product_expansion(sum.lhs, a, b));

  LinearCombo dropped = sum.lhs;
  dropped.add(sum.lhs.terms().begin()->first, -1);
  EXPECT_FALSE(matches_product_expansion(dropped, a, b));
  LinearCombo doubled = sum.lhs;
  doubled.add(sum.lhs.terms().begin()->first, 1);
  EXPECT_FALSE(matches_product_expansion(doubled, a, b));

  const InequalitySum one = sum_inequalities({sets[0]});
  EXPECT_EQ(one.bound, 1);
  EXPECT_EQ(one.lhs, sets[0].lhs());
}

TEST(KcbsTwin, UncertifiedInequalityCannotBeSummed) {
  auto scenario = std::make_shared<const Scenario>(kcbs_twin_scenario());
  std::vector<EInequality> ineqs;
  ineqs.emplace_back("raw", std::vector<LabeledEvent>{{"x", ev("A1+ A2+ B1+ B2+")}}, scenario);
  EXPECT_FALSE(ineqs[0].certified());
  EXPECT_THROW(sum_inequalities(ineqs), UncertifiedError);
  ineqs[0].certify();
  EXPECT_NO_THROW(sum_inequalities(ineqs));

  std::vector<EInequality> bad;
  bad.emplace_back("bad", std::vector<LabeledEvent>{{"x", ev("A1+ A2+")}, {"y", ev("A2+ A3+")}},
                   scenario);
  const auto& c = bad[0].certify();
  EXPECT_FALSE(c.ok());
  ASSERT_EQ(c.failures.size(), 1u);
  EXPECT_EQ(c.failures[0].first, 0u);
  EXPECT_EQ(c.failures[0].second, 1u);
  EXPECT_THROW(sum_inequalities(bad), UncertifiedError);
}

TEST(ChshExtended, Scenario) {
  const Scenario s = chsh_extended_scenario();
  EXPECT_EQ(s.observables().size(), 12u);
  EXPECT_EQ(s.find("A2")->copy, Copy::A);
  EXPECT_EQ(s.find("B4")->copy, Copy::B);
  EXPECT_EQ(s.close(ev("A1+ B1+")).value("C11"), P);
  EXPECT_EQ(s.close(ev("A1+ B3-")).value("C13"), M);
  EXPECT_EQ(s.close(ev("A3- B1-")).value("C31"), P);

  std::vector<Event> norm;
  for (Outcome x : {P, M})
    for (Outcome y : {P, M}) norm.push_back(Event{{"C11", x}, {"C33", y}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_TRUE(are_exclusive(norm[i], norm[j], s));
}

TEST(ChshTable, FirstRowMatchesListedSet) {
  const auto sets = chsh_table1_sets();
  ASSERT_EQ(sets.size(), 16u);
  const Scenario s = chsh_extended_scenario();
  std::vector<Event> listed{
      ev("A1+ A2+ B1+ B2+ C11+"), ev("A1+ A2- B1+ B2- C11+"), ev("A3+ A2+ B3- B2- C33-"),
      ev("A3+ A2- B3- B2+ C33-"), ev("A1- A2- B1- B2- C11+"), ev("A1- A2+ B1- B2+ C11+"),
      ev("A3- A2- B3+ B2+ C33-"), ev("A3- A2+ B3+ B2- C33-"), ev("C11- C33+")};
  ASSERT_EQ(sets[0].events().size(), 9u);
  for (std::size_t i = 0; i < 9; ++i)
    EXPECT_EQ(s.close(sets[0].events()[i].event), s.close(listed[i])) << i;
}

TEST(ChshTable, AllSetsCertifiedAndProductsCovered) {
  const auto sets = chsh_table1_sets();
  for (const auto& q : sets) {
    EXPECT_EQ(q.events().size(), 9u);
    EXPECT_TRUE(q.certified()) << q.name();
  }
  const InequalitySum sum = sum_inequalities(sets);
  EXPECT_EQ(sum.bound, 16);

  const auto s = chsh_events();
  const auto c = chsh_complement_events();
  const LinearCombo ss = product_expansion(s, b_side(s));
  const LinearCombo cc = product_expansion(c, b_side(c));
  std::size_t product_terms = 0;
  std::map<Monomial, int> c_terms;
  for (const auto& [m, k] : sum.lhs.terms()) {
    if (m.size() == 2) {
      product_terms += static_cast<std::size_t>(k);
      EXPECT_EQ(k, 1);
      EXPECT_NE(ss.coefficient(m) + cc.coefficient(m), 0) << to_string(m);
    } else {
      c_terms[m] += static_cast<int>(k);
    }
  }
  EXPECT_EQ(product_terms, 128u);
  EXPECT_EQ(c_terms.size(), 8u);
  for (const auto& [m, k] : c_terms) EXPECT_EQ(k, 2) << to_string(m);

  const LinearCombo residual = sum.lhs - ss - cc;
  EXPECT_EQ(normalization_constant(residual, {{"C11", "C33"}, {"C13", "C31"}}), 4);
}

TEST(ChshTable, NormalizationConstantRejectsPartialGroups) {
  LinearCombo r;
  r.add({{ev("C11+ C33+"), Copy::Shared}}, 1);
  EXPECT_EQ(normalization_constant(r, {{"C11", "C33"}}), std::nullopt);
  r.add({{ev("C11+ C33-"), Copy::Shared}}, 1);
  r.add({{ev("C11- C33+"), Copy::Shared}}, 1);
  r.add({{ev("C11- C33-"), Copy::Shared}}, 1);
  EXPECT_EQ(normalization_constant(r, {{"C11", "C33"}}), 1);
  r.add({{ev("A1+"), Copy::A}}, 1);
  EXPECT_EQ(normalization_constant(r, {{"C11", "C33"}}), std::nullopt);
}

TEST(ChshTable, EverySingleSignCorruptionFails) {
  const auto sets = chsh_table1_sets();
  auto scenario = std::make_shared<const Scenario>(chsh_extended_scenario());
  std::size_t cases = 0;
  for (const auto& q : sets) {
    for (std::size_t e = 0; e < q.events().size(); ++e) {
      const auto as = q.events()[e].event.assignments();
      for (std::size_t k = 0; k < as.size(); ++k) {
        std::vector<Assignment> changed(as.begin(), as.end());
        changed[k].outcome = -changed[k].outcome;
        auto events = q.events();
        events[e].event = Event(changed);
        EInequality bad(q.name(), events, scenario);
        EXPECT_FALSE(bad.certify().ok()) << q.name() << " event " << e << " " << changed[k].observable;
        ++cases;
      }
    }
  }
  EXPECT_EQ(cases, 16u * (8 * 4 + 2));
}

TEST(SymmetricBound, Values) {
  const auto k = check_kcbs_identity(sum_inequalities(kcbs_twin_sets()));
  ASSERT_TRUE(k.has_value());
  const auto kb = solve_symmetric_bound(*k);
  EXPECT_NEAR(kb.upper, std::sqrt(5.0), 1e-12);
  EXPECT_LE(kb.upper * kb.upper, 5 + 1e-15);
  EXPECT_EQ(kb.lower, 0);

  const auto c = check_chsh_identity(sum_inequalities(chsh_table1_sets()));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->constant(), 4);
  EXPECT_EQ(c->bound(), 16);
  const auto cb = solve_symmetric_bound(*c);
  EXPECT_NEAR(cb.upper, 2 + std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(cb.lower, 2 - std::sqrt(2.0), 1e-12);
  for (double s : {cb.upper, cb.lower}) EXPECT_NEAR(2 * s * s - 8 * s + 4, 0, 1e-12);

  // The identities do not hold for the wrong family.
  EXPECT_FALSE(check_chsh_identity(sum_inequalities(kcbs_twin_sets())).has_value());
  EXPECT_FALSE(check_kcbs_identity(sum_inequalities(chsh_table1_sets())).has_value());
}

TEST(Transcripts, BuiltIn) {
  const auto k = verify_kcbs();
  EXPECT_TRUE(k.ok());
  EXPECT_EQ(k.sets.size(), 5u);
  EXPECT_NEAR(k.bound->upper, std::sqrt(5.0), 1e-12);
  const auto c = verify_chsh();
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.sets.size(), 16u);
  EXPECT_EQ(c.sets[0].certification.pairs.size(), 36u);
  EXPECT_NEAR(c.bound->upper, 2 + std::sqrt(2.0), 1e-12);
  const auto s = verify_specker();
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(*s.kolmogorov, Rational(3, 2));
  EXPECT_EQ(*s.e_bound, Rational(1));
}

TEST(Transcripts, SetFileRoundTripAndCorruption) {
  const SetFile f = to_set_file(chsh_table1_sets());
  std::ostringstream out;
  write_set_file(out, f.scenario, f.sets);
  std::istringstream in(out.str());
  const SetFile parsed = parse_set_file(in);
  EXPECT_TRUE(verify_chsh(&parsed).ok());

  SetFile bad = parsed;
  auto& e = bad.sets[2].events[3].event;
  std::vector<Assignment> as(e.assignments().begin(), e.assignments().end());
  as[0].outcome = -as[0].outcome;
  e = Event(as);
  const auto t = verify_chsh(&bad);
  EXPECT_FALSE(t.ok());
  EXPECT_FALSE(t.sum.has_value());
  EXPECT_NE(t.failure().find("not exclusive"), std::string::npos);
  EXPECT_NE(t.failure().find(bad.sets[2].name), std::string::npos);

  // A set file with only some of the sets certifies but fails the identity.
  SetFile partial = parsed;
  partial.sets.pop_back();
  const auto p = verify_chsh(&partial);
  EXPECT_TRUE(p.all_certified);
  EXPECT_FALSE(p.identity_ok);
  EXPECT_FALSE(p.ok());
}
