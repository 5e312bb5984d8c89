#include "exclusivity/e_verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "exclusivity/classical.hpp"
#include "exclusivity/graph.hpp"
#include "exclusivity/builtin_scenarios.hpp"

namespace excl {

Event twin_compound(const Event& a, const Event& b, const Scenario& twin) {
  auto check = [&](const Event& e, Copy want) {
    for (const auto& x : e.assignments()) {
      const ObservableId* id = twin.find(x.observable);
      if (!id) throw ScenarioError("undeclared observable '" + x.observable + "'");
      if (id->copy != want)
        throw ScenarioError("observable '" + x.observable + "' is not in copy " +
                            std::string(to_string(want)));
    }
  };
  check(a, Copy::A);
  check(b, Copy::B);
  return a.merged(b);
}

Event relabel_prefix(const Event& e, char from, char to) {
  std::vector<Assignment> out;
  for (auto a : e.assignments()) {
    if (!a.observable.empty() && a.observable.front() == from) a.observable.front() = to;
    out.push_back(std::move(a));
  }
  return Event(std::move(out));
}

EInequality::EInequality(std::string name, std::vector<LabeledEvent> events,
                         std::shared_ptr<const Scenario> scenario)
    : name_(std::move(name)), events_(std::move(events)), scenario_(std::move(scenario)) {
  if (!scenario_) throw std::invalid_argument("inequality needs a scenario");
  for (const auto& e : events_) lhs_.add(factorize(e.event, *scenario_), 1);
}

const Certification& EInequality::certify() {
  Certification c;
  for (std::size_t i = 0; i < events_.size(); ++i)
    for (std::size_t j = i + 1; j < events_.size(); ++j) {
      auto w = exclusivity_witness(events_[i].event, events_[j].event, *scenario_);
      PairWitness p{i, j, w.value_or("")};
      if (!w) c.failures.push_back(p);
      c.pairs.push_back(std::move(p));
    }
  certified_ = c.ok();
  cert_ = std::move(c);
  return *cert_;
}

InequalitySum sum_inequalities(const std::vector<EInequality>& ineqs) {
  InequalitySum s;
  for (const auto& q : ineqs) {
    if (!q.certified()) throw UncertifiedError("inequality '" + q.name() + "' is not certified");
    s.lhs.add(q.lhs());
    ++s.bound;
  }
  return s;
}

bool matches_product_expansion(const LinearCombo& lhs, std::span<const Event> sum_a,
                               std::span<const Event> sum_b) {
  return lhs == product_expansion(sum_a, sum_b);
}

Scenario kcbs_twin_scenario() {
  Scenario s("kcbs-twin");
  for (char c : {'A', 'B'})
    for (int i = 1; i <= 5; ++i)
      s.declare(std::string(1, c) + std::to_string(i), c == 'A' ? Copy::A : Copy::B);
  return s;
}

Scenario chsh_extended_scenario() {
  Scenario s("chsh-twin");
  for (char c : {'A', 'B'})
    for (int i = 1; i <= 4; ++i)
      s.declare(std::string(1, c) + std::to_string(i), c == 'A' ? Copy::A : Copy::B);
  s.declare_derived(DerivedObservable::equality("C11", "A1", "B1"));
  s.declare_derived(DerivedObservable::equality("C33", "A3", "B3"));
  s.declare_derived(DerivedObservable::equality("C13", "A1", "B3"));
  s.declare_derived(DerivedObservable::equality("C31", "A3", "B1"));
  return s;
}

namespace {

std::string compact_label(const Event& e) {
  std::string out;
  for (const auto& a : e.assignments()) {
    out += a.observable;
    out += sign_char(a.outcome);
  }
  return out;
}

std::vector<Event> copy_b(const std::vector<Event>& a) {
  std::vector<Event> b;
  for (const auto& e : a) b.push_back(relabel_prefix(e, 'A', 'B'));
  return b;
}

std::vector<EInequality> certified(std::vector<EInequality> ineqs) {
  for (auto& q : ineqs) q.certify();
  return ineqs;
}

// Printed table rows: four A/B events and the C event.
constexpr std::array<std::array<const char*, 5>, 8> kTableRows{{
    {"A1+ A2+ B1+ B2+", "A1+ A2- B1+ B2-", "A3+ A2+ B3- B2-", "A3+ A2- B3- B2+", "C11- C33+"},
    {"A1+ A2+ B1- B2-", "A1+ A2- B1- B2+", "A3+ A2+ B3+ B2+", "A3+ A2- B3+ B2-", "C11+ C33-"},
    {"A1+ A2+ B1- B4-", "A1+ A2- B1- B4+", "A3+ A2+ B3- B4+", "A3+ A2- B3- B4-", "C11+ C33+"},
    {"A1+ A2+ B1+ B4+", "A1+ A2- B1+ B4-", "A3+ A2+ B3+ B4-", "A3+ A2- B3+ B4+", "C11- C33-"},
    {"A1+ A2+ B3- B4+", "A1+ A2- B3- B4-", "A3+ A2+ B1- B4-", "A3+ A2- B1- B4+", "C13+ C31+"},
    {"A1+ A2+ B3+ B4-", "A1+ A2- B3+ B4+", "A3+ A2+ B1+ B4+", "A3+ A2- B1+ B4-", "C13- C31-"},
    {"A1+ A2+ B3+ B2+", "A1+ A2- B3+ B2-", "A3+ A2+ B1- B2-", "A3+ A2- B1- B2+", "C13- C31+"},
    {"A1+ A2+ B3- B2-", "A1+ A2- B3- B2+", "A3+ A2+ B1+ B2+", "A3+ A2- B1+ B2-", "C13+ C31-"},
}};

// The printed rows use the opposite sign convention for observable 4 from the
// one that makes the rows products of S_CHSH and 4 - S_CHSH events.
Event flip_index4(const Event& e) {
  std::vector<Assignment> out;
  for (auto a : e.assignments()) {
    if (a.observable.size() == 2 && a.observable[1] == '4') a.outcome = -a.outcome;
    out.push_back(std::move(a));
  }
  return Event(std::move(out));
}

// Swap indices 2 and 4 on both copies and negate A1, B1. Derived C values
// flip when exactly one argument index is 1.
Event table_image(const Event& e) {
  std::vector<Assignment> out;
  for (auto a : e.assignments()) {
    std::string& n = a.observable;
    if (n.front() == 'C') {
      if ((n[1] == '1') != (n[2] == '1')) a.outcome = -a.outcome;
    } else {
      if (n[1] == '1') a.outcome = -a.outcome;
      if (n[1] == '2')
        n[1] = '4';
      else if (n[1] == '4')
        n[1] = '2';
    }
    out.push_back(std::move(a));
  }
  return Event(std::move(out));
}

std::vector<LabeledEvent> expand_row(const std::array<const char*, 5>& row, bool image) {
  std::vector<Event> shown;
  for (std::size_t k = 0; k < 4; ++k) shown.push_back(flip_index4(parse_event(row[k])));
  Event c = parse_event(row[4]);
  if (image) {
    for (auto& e : shown) e = table_image(e);
    c = table_image(c);
  }
  std::vector<LabeledEvent> out;
  for (const auto& e : shown) out.push_back({compact_label(e), e});
  for (const auto& e : shown) {
    Event n = negate_event(e);
    out.push_back({compact_label(n), n});
  }
  out.push_back({compact_label(c), c});
  return out;
}

std::vector<Event> kcbs_b_events() { return copy_b(kcbs_events()); }

}  // namespace

std::vector<EInequality> kcbs_twin_sets() {
  auto scenario = std::make_shared<const Scenario>(kcbs_twin_scenario());
  const auto a = kcbs_events();
  const auto b = kcbs_b_events();
  std::vector<EInequality> out;
  int number = 1;
  for (std::size_t r : {0, 2, 4, 1, 3}) {
    std::vector<LabeledEvent> events;
    for (std::size_t i = 0; i < 5; ++i) {
      const Event e = twin_compound(a[i], b[(3 * i + r) % 5], *scenario);
      events.push_back({compact_label(e), e});
    }
    out.emplace_back("kcbs-" + std::to_string(number++), std::move(events), scenario);
  }
  return certified(std::move(out));
}

std::vector<EInequality> chsh_table1_sets() {
  auto scenario = std::make_shared<const Scenario>(chsh_extended_scenario());
  std::vector<EInequality> out;
  for (bool image : {false, true})
    for (std::size_t r = 0; r < kTableRows.size(); ++r)
      out.emplace_back((image ? "image-" : "row-") + std::to_string(r + 1),
                       expand_row(kTableRows[r], image), scenario);
  return certified(std::move(out));
}

std::vector<EInequality> inequalities_from(const SetFile& file) {
  auto scenario = std::make_shared<const Scenario>(file.scenario);
  std::vector<EInequality> out;
  for (const auto& s : file.sets) out.emplace_back(s.name, s.events, scenario);
  return out;
}

SetFile to_set_file(const std::vector<EInequality>& ineqs) {
  SetFile f;
  if (ineqs.empty()) return f;
  const Scenario& sc = ineqs.front().scenario();
  Scenario decl(sc.name());
  for (const auto& o : sc.observables())
    if (!sc.is_derived(o.name)) decl.declare(o);
  for (const auto& d : sc.derived()) decl.declare_derived(d);
  f.scenario = std::move(decl);
  for (const auto& q : ineqs) f.sets.push_back({q.name(), q.events()});
  return f;
}

std::optional<std::int64_t> normalization_constant(const LinearCombo& residual,
                                                   const std::vector<NormalizationGroup>& groups) {
  std::set<Monomial> seen;
  std::int64_t total = 0;
  for (const auto& g : groups) {
    std::optional<std::int64_t> k;
    for (Outcome x : {Outcome::Plus, Outcome::Minus})
      for (Outcome y : {Outcome::Plus, Outcome::Minus}) {
        Monomial m{{Event{{g.first, x}, {g.second, y}}, Copy::Shared}};
        const std::int64_t c = residual.coefficient(m);
        if (k && *k != c) return std::nullopt;
        k = c;
        seen.insert(m);
      }
    total += *k;
  }
  for (const auto& [m, c] : residual.terms())
    if (!seen.count(m)) return std::nullopt;
  return total;
}

std::optional<IdentityCertificate> check_kcbs_identity(const InequalitySum& sum) {
  const auto a = kcbs_events();
  const auto b = kcbs_b_events();
  if (!matches_product_expansion(sum.lhs, a, b)) return std::nullopt;
  return IdentityCertificate(BoundKind::Kcbs, 1, 0, 0, 0, sum.bound);
}

std::optional<IdentityCertificate> check_chsh_identity(const InequalitySum& sum) {
  const auto s = chsh_events();
  const auto c = chsh_complement_events();
  const LinearCombo residual =
      sum.lhs - product_expansion(s, copy_b(s)) - product_expansion(c, copy_b(c));
  const auto k = normalization_constant(residual, {{"C11", "C33"}, {"C13", "C31"}});
  if (!k) return std::nullopt;
  // Each complement sum is K - S with K = 4 normalized pairs.
  return IdentityCertificate(BoundKind::Chsh, 1, 1, 4, *k, sum.bound);
}

SymmetricBound solve_symmetric_bound(const IdentityCertificate& cert) {
  // (a + b) S^2 - 2 b K S + (b K^2 + c - bound) <= 0
  const double a = static_cast<double>(cert.product_coefficient());
  const double b = static_cast<double>(cert.complement_coefficient());
  const double k = static_cast<double>(cert.complement_total());
  const double qa = a + b;
  const double qb = -2.0 * b * k;
  const double qc = b * k * k + static_cast<double>(cert.constant() - cert.bound());
  if (qa <= 0.0) throw std::domain_error("bound is not quadratic in S");
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) throw std::domain_error("no feasible S");
  const double root = std::sqrt(disc);
  // Avoid cancellation: compute the larger-magnitude root first.
  const double q = -0.5 * (qb + (qb >= 0.0 ? root : -root));
  double r1 = q / qa;
  double r2 = q != 0.0 ? qc / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r2, std::max(0.0, r1)};
}

bool VerificationTranscript::ok() const noexcept {
  if (!all_certified || !identity_ok) return false;
  if (kind == "specker") return kolmogorov.has_value() && e_bound.has_value();
  return bound.has_value();
}

std::string VerificationTranscript::failure() const {
  for (const auto& s : sets) {
    if (s.certification.ok()) continue;
    const auto& f = s.certification.failures.front();
    return "set " + s.name + ": events " + std::to_string(f.first + 1) + " " +
           s.events[f.first] + " and " + std::to_string(f.second + 1) + " " +
           s.events[f.second] + " are not exclusive";
  }
  if (!identity_ok) return "summation identity does not hold";
  return {};
}

namespace {

VerificationTranscript replay(std::string kind, std::vector<EInequality> ineqs) {
  VerificationTranscript t;
  t.kind = std::move(kind);
  t.all_certified = !ineqs.empty();
  for (auto& q : ineqs) {
    if (!q.certification()) q.certify();
    SetTranscript s;
    s.name = q.name();
    for (const auto& e : q.events()) s.events.push_back(to_string(e.event));
    s.lhs = q.lhs();
    s.certification = *q.certification();
    t.all_certified = t.all_certified && q.certified();
    t.sets.push_back(std::move(s));
  }
  if (t.all_certified) t.sum = sum_inequalities(ineqs);
  return t;
}

}  // namespace

VerificationTranscript verify_kcbs(const SetFile* sets) {
  VerificationTranscript t =
      replay("kcbs", sets ? inequalities_from(*sets) : kcbs_twin_sets());
  t.identity = "S^A S^B <= 5";
  t.assumptions = {"the two copies are independent: joint probabilities factorize",
                   "the maximum is the same in both copies: S^A = S^B"};
  if (!t.sum) return t;
  if (auto cert = check_kcbs_identity(*t.sum)) {
    t.identity_ok = true;
    t.identity = "S^A S^B <= " + std::to_string(cert->bound());
    t.bound = solve_symmetric_bound(*cert);
  }
  return t;
}

VerificationTranscript verify_chsh(const SetFile* sets) {
  VerificationTranscript t =
      replay("chsh", sets ? inequalities_from(*sets) : chsh_table1_sets());
  t.identity = "S^A S^B + (4 - S^A)(4 - S^B) + 4 <= 16";
  t.assumptions = {"the two copies are independent: joint probabilities factorize",
                   "C observables exist with C_jk = +1 iff A_j and B_k agree",
                   "the maximum is the same in both copies: S^A = S^B"};
  if (!t.sum) return t;
  if (auto cert = check_chsh_identity(*t.sum)) {
    t.identity_ok = true;
    t.identity = "S^A S^B + (4 - S^A)(4 - S^B) + " + std::to_string(cert->constant()) +
                 " <= " + std::to_string(cert->bound());
    t.bound = solve_symmetric_bound(*cert);
  }
  return t;
}

VerificationTranscript verify_specker() {
  auto scenario = std::make_shared<const Scenario>(specker_scenario());
  std::vector<LabeledEvent> events(scenario->events().begin(), scenario->events().end());
  std::vector<EInequality> ineqs;
  ineqs.emplace_back("triangle", events, scenario);
  VerificationTranscript t = replay("specker", std::move(ineqs));
  t.identity = "P(e1) + P(e2) + P(e3) <= 1";
  t.assumptions = {"pairwise exclusive events are jointly exclusive"};
  if (!t.sum) return t;
  LinearCombo expected;
  for (const auto& e : specker_triangle_events()) expected.add({{e, Copy::A}}, 1);
  t.identity_ok = t.sum->lhs == expected && t.sum->bound == 1;
  const Graph g = build_exclusivity_graph(*scenario);
  t.kolmogorov = kolmogorov_max(g);
  t.e_bound = clique_lp_max(g);
  return t;
}

}  // namespace excl
