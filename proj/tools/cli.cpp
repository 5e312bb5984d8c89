#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "exclusivity/builtin_scenarios.hpp"
#include "exclusivity/scenario_io.hpp"

namespace excl::cli {

std::string real_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string fixed7(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  return buf;
}

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

Json rational_array(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

Json real_array(std::span<const double> xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(real_string(x));
  return a;
}

Json vertex_array(const VertexSet& s) {
  Json a = Json::array();
  for (auto v : s) a.push_back(v);
  return a;
}

Json residuals_json(const std::vector<OrthogonalityResidual>& rs) {
  Json a = Json::array();
  for (const auto& r : rs)
    a.push_back({{"first", r.first}, {"second", r.second}, {"residual", real_string(r.residual)}});
  return a;
}

Json model_json(const ProjectorModel& m) {
  Json events = Json::array();
  for (std::size_t i = 0; i < m.vectors.size(); ++i)
    events.push_back({{"event", m.labels[i]},
                      {"vector", real_array(m.vectors[i])},
                      {"probability", real_string(m.probability(i))}});
  return {{"state", real_array(m.state)}, {"events", events}};
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["events"] = r.events;
  j["exclusive_pairs"] = r.edges;
  j["deterministic"] = {{"value", r.deterministic.value},
                        {"witness", to_string(r.deterministic.witness.values)}};
  j["independence"] = {{"value", r.independence.size},
                       {"witness", vertex_array(r.independence.witness)}};
  j["kolmogorov_lp"] = {{"value", to_string(r.kolmogorov.value)},
                        {"solution", rational_array(r.kolmogorov.x)}};
  j["clique_lp"] = {{"value", to_string(r.clique_lp.value)},
                    {"solution", rational_array(r.clique_lp.x)}};
  j["theta"] = {{"value", real_string(r.theta.value)},
                {"dual_value", real_string(r.theta.dual_value)},
                {"gap", real_string(r.theta.gap)},
                {"iterations", r.theta.iterations}};
  j["e_principle"] = r.e_principle ? Json(real_string(*r.e_principle)) : Json(nullptr);
  if (r.conversion) {
    const auto& c = *r.conversion;
    j["conversion"] = {{"name", c.name},
                       {"classical", real_string(c.classical)},
                       {"quantum", real_string(c.quantum)},
                       {"e_principle", c.e_principle ? Json(real_string(*c.e_principle))
                                                     : Json(nullptr)}};
  } else {
    j["conversion"] = nullptr;
  }
  return j;
}

Json to_json(const VerificationTranscript& t) {
  Json j;
  j["kind"] = t.kind;
  Json sets = Json::array();
  for (const auto& s : t.sets) {
    Json pairs = Json::array();
    for (const auto& p : s.certification.pairs)
      pairs.push_back({{"first", p.first + 1},
                       {"second", p.second + 1},
                       {"observable", p.observable.empty() ? Json(nullptr) : Json(p.observable)}});
    sets.push_back({{"name", s.name},
                    {"events", s.events},
                    {"certified", s.certification.ok()},
                    {"pairs", pairs},
                    {"lhs", to_string(s.lhs)}});
  }
  j["sets"] = sets;
  j["all_certified"] = t.all_certified;
  if (t.sum)
    j["sum"] = {{"lhs", to_string(t.sum->lhs)}, {"terms", t.sum->lhs.size()}, {"bound", t.sum->bound}};
  else
    j["sum"] = nullptr;
  j["identity"] = {{"statement", t.identity}, {"holds", t.identity_ok}};
  j["assumptions"] = t.assumptions;
  j["bound"] = t.bound ? Json{{"upper", real_string(t.bound->upper)},
                              {"lower", real_string(t.bound->lower)}}
                       : Json(nullptr);
  if (t.kolmogorov) j["kolmogorov_lp"] = to_string(*t.kolmogorov);
  if (t.e_bound) j["e_principle_lp"] = to_string(*t.e_bound);
  j["ok"] = t.ok();
  if (!t.ok()) j["failure"] = t.failure();
  return j;
}

Json to_json(const KcbsRealization& r) {
  Json umbrella = Json::array();
  for (const auto& v : r.umbrella) umbrella.push_back(real_array(v));
  return {{"kind", "kcbs"},
          {"cos_theta", real_string(r.cos_theta)},
          {"umbrella", umbrella},
          {"model", model_json(r.model)},
          {"negated_model", model_json(r.negated)},
          {"s", real_string(r.s_value)},
          {"s_prime", real_string(r.s_prime_value)},
          {"kappa", real_string(r.kappa)},
          {"adjacent_residuals", real_array(r.adjacent_residuals)},
          {"exclusive_residuals", residuals_json(r.exclusive_residuals)}};
}

Json to_json(const ChshRealization& r) {
  Json joint = Json::array();
  for (const auto& q : r.joint) joint.push_back(real_array(q));
  Json qubits = Json::array();
  for (int q : r.qubit) qubits.push_back(q);
  return {{"kind", "chsh"},
          {"angles", real_array(r.angles)},
          {"qubits", qubits},
          {"model", model_json(r.model)},
          {"correlators", real_array(r.correlators)},
          {"joint", joint},
          {"beta", real_string(r.beta)},
          {"s", real_string(r.s_value)},
          {"exclusive_residuals", residuals_json(r.exclusive_residuals)}};
}

Json to_json(const ThetaResult& r, const PrimalCheck& check) {
  return {{"value", real_string(r.value)},
          {"dual_value", real_string(r.dual_value)},
          {"gap", real_string(r.gap)},
          {"iterations", r.iterations},
          {"primal_check",
           {{"min_eigenvalue", real_string(check.min_eigenvalue)},
            {"trace_error", real_string(check.trace_error)},
            {"max_edge_entry", real_string(check.max_edge_entry)},
            {"ok", check.ok}}}};
}

std::vector<Check> reproduction_checks(double tol) {
  std::vector<Check> out;
  auto near = [&](std::string name, double value, double expected, double within) {
    out.push_back({std::move(name), fixed7(value), fixed7(expected),
                   std::abs(value - expected) <= within});
  };
  auto exact = [&](std::string name, const std::string& value, const std::string& expected) {
    out.push_back({std::move(name), value, expected, value == expected});
  };
  const double sqrt5 = std::sqrt(5.0);
  const double sqrt2 = std::sqrt(2.0);

  const auto specker = verify_specker();
  exact("specker kolmogorov LP", specker.kolmogorov ? to_string(*specker.kolmogorov) : "-", "3/2");
  exact("specker clique LP", specker.e_bound ? to_string(*specker.e_bound) : "-", "1");

  for (const char* name : {"kcbs", "chsh"}) {
    const Scenario sc = builtin_scenario(name);
    const auto events = sc.event_list();
    const auto det = deterministic_max(events, sc);
    const auto alpha = max_independent_set(build_exclusivity_graph(sc));
    const std::string expected = std::string(name) == "kcbs" ? "2" : "3";
    exact(std::string(name) + " deterministic bound", std::to_string(det.value), expected);
    exact(std::string(name) + " independence number", std::to_string(alpha.size), expected);
  }

  ThetaOptions opts;
  opts.tol = tol;
  const std::pair<const char*, Graph> graphs[] = {{"theta C5", cycle_graph(5)},
                                                  {"theta circulant(8,{1,4})", circulant(8, {1, 4})}};
  const double targets[] = {sqrt5, 2.0 + sqrt2};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& [name, g] = graphs[k];
    const ThetaResult t = lovasz_theta(g, opts);
    const PrimalCheck pc = verify_primal_certificate(g, t.primal, 1e-6);
    near(name, t.value, targets[k], 1e-6);
    out.push_back({std::string(name) + " gap", sci(t.gap), "<= 1.0e-06", t.gap <= 1e-6});
    out.push_back({std::string(name) + " primal certificate", pc.ok ? "ok" : "fails", "ok", pc.ok});
  }

  const auto kcbs = verify_kcbs();
  const double s_kcbs = kcbs.bound ? kcbs.bound->upper : NAN;
  exact("kcbs twin sets certified", kcbs.all_certified ? "yes" : "no", "yes");
  exact("kcbs summation identity", kcbs.identity_ok ? "holds" : "fails", "holds");
  near("kcbs E-principle bound", s_kcbs, sqrt5, 1e-12);

  const auto chsh = verify_chsh();
  const double s_chsh = chsh.bound ? chsh.bound->upper : NAN;
  exact("chsh table sets certified", chsh.all_certified ? "yes" : "no", "yes");
  exact("chsh summation identity", chsh.identity_ok ? "holds" : "fails", "holds");
  near("chsh E-principle bound", s_chsh, 2.0 + sqrt2, 1e-12);

  near("kappa limit", kappa_from_s(s_kcbs, s_kcbs), 4.0 * sqrt5 - 5.0, 1e-9);
  near("beta limit", beta_from_s(s_chsh), 2.0 * sqrt2, 1e-9);

  const auto qk = kcbs_realization();
  near("kcbs realization S", qk.s_value, sqrt5, 1e-9);
  near("kcbs realization S'", qk.s_prime_value, sqrt5, 1e-9);
  const double worst = *std::max_element(qk.adjacent_residuals.begin(), qk.adjacent_residuals.end());
  out.push_back({"kcbs orthogonality residual", sci(worst), "<= 1.0e-10", worst <= 1e-10});
  const auto qc = chsh_realization();
  near("chsh realization beta", qc.beta, 2.0 * sqrt2, 1e-12);
  near("chsh realization S", qc.s_value, 2.0 + sqrt2, 1e-12);
  return out;
}

namespace {

struct Options {
  double tol = 1e-7;
  std::string format = "table";
  bool json() const { return format == "json"; }
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_bounds(const std::string& target, const Options& o, std::ostream& out, std::ostream& err) {
  const Scenario sc = is_builtin_scenario(target) ? builtin_scenario(target) : load_scenario(target);
  const BoundReport r = compute_bounds(sc, o.tol);
  const auto problems = r.violations(o.tol);
  if (o.json()) {
    Json j = to_json(r);
    j["violations"] = problems;
    print_json(out, j);
  } else {
    out << "scenario " << r.scenario << " (" << r.events << " events, " << r.edges
        << " exclusive pairs)\n";
    out << "  deterministic   " << r.deterministic.value << "  witness "
        << to_string(r.deterministic.witness.values) << '\n';
    out << "  independence    " << r.independence.size << "  witness "
        << to_string(r.independence.witness) << '\n';
    out << "  kolmogorov LP   " << to_string(r.kolmogorov.value) << '\n';
    out << "  clique LP       " << to_string(r.clique_lp.value) << '\n';
    out << "  theta           " << fixed7(r.theta.value) << "  gap " << sci(r.theta.gap) << '\n';
    if (r.e_principle) out << "  E principle     " << fixed7(*r.e_principle) << '\n';
    if (r.conversion) {
      const auto& c = *r.conversion;
      out << "  " << c.name << "  classical " << fixed7(c.classical) << "  theta "
          << fixed7(c.quantum);
      if (c.e_principle) out << "  E " << fixed7(*c.e_principle);
      out << '\n';
    }
  }
  for (const auto& p : problems) err << "error: " << p << '\n';
  return problems.empty() ? kOk : kVerificationFailed;
}

void print_transcript(std::ostream& out, const VerificationTranscript& t) {
  out << "verify " << t.kind << '\n';
  for (const auto& s : t.sets) {
    out << "set " << s.name << " (" << s.events.size() << " events)\n";
    for (std::size_t i = 0; i < s.events.size(); ++i)
      out << "  " << i + 1 << "  " << s.events[i] << '\n';
    out << "  certificate";
    for (const auto& p : s.certification.pairs)
      out << ' ' << p.first + 1 << '-' << p.second + 1 << ':'
          << (p.observable.empty() ? "NONE" : p.observable);
    out << '\n';
    out << "  exclusive pairs " << s.certification.pairs.size() - s.certification.failures.size()
        << '/' << s.certification.pairs.size() << (s.certification.ok() ? "  certified" : "  FAILED")
        << '\n';
    out << "  " << to_string(s.lhs) << " <= 1\n";
  }
  if (t.sum) {
    out << "sum of " << t.sum->bound << " inequalities (" << t.sum->lhs.size() << " terms):\n  "
        << to_string(t.sum->lhs) << " <= " << t.sum->bound << '\n';
    out << "identity " << t.identity << ": " << (t.identity_ok ? "OK" : "FAILED") << '\n';
  }
  for (const auto& a : t.assumptions) out << "assumption: " << a << '\n';
  if (t.kolmogorov) out << "kolmogorov LP " << to_string(*t.kolmogorov) << '\n';
  if (t.e_bound) out << "E principle LP " << to_string(*t.e_bound) << '\n';
  if (t.bound)
    out << "bound S <= " << fixed7(t.bound->upper) << "  (feasible interval ["
        << fixed7(t.bound->lower) << ", " << fixed7(t.bound->upper) << "])\n";
  out << "result " << (t.ok() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const std::string& kind, const std::string& sets_path, bool dump, const Options& o,
               std::ostream& out, std::ostream& err) {
  if (dump) {
    if (kind == "specker") {
      err << "error: no set file form for specker\n";
      return kInputError;
    }
    const auto sets = kind == "kcbs" ? kcbs_twin_sets() : chsh_table1_sets();
    const SetFile f = to_set_file(sets);
    write_set_file(out, f.scenario, f.sets);
    return kOk;
  }
  std::optional<SetFile> file;
  if (!sets_path.empty()) {
    if (kind == "specker") {
      err << "error: --sets is not supported for specker\n";
      return kInputError;
    }
    file = load_set_file(sets_path);
  }
  const SetFile* f = file ? &*file : nullptr;
  const VerificationTranscript t =
      kind == "kcbs" ? verify_kcbs(f) : kind == "chsh" ? verify_chsh(f) : verify_specker();
  if (o.json())
    print_json(out, to_json(t));
  else
    print_transcript(out, t);
  if (!t.ok()) {
    err << "error: " << t.failure() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_theta(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(path);
  ThetaOptions opts;
  opts.tol = o.tol;
  const ThetaResult r = lovasz_theta(g, opts);
  const PrimalCheck pc = verify_primal_certificate(g, r.primal, std::max(o.tol, 1e-9) * 10);
  if (o.json()) {
    Json j = to_json(r, pc);
    j = Json{{"graph", path}, {"vertices", g.size()}, {"edges", g.edge_count()}, {"theta", j}};
    print_json(out, j);
  } else {
    out << "graph " << path << " (" << g.size() << " vertices, " << g.edge_count() << " edges)\n";
    out << "  theta       " << fixed7(r.value) << '\n';
    out << "  dual bound  " << fixed7(r.dual_value) << '\n';
    out << "  gap         " << sci(r.gap) << '\n';
    out << "  iterations  " << r.iterations << '\n';
    out << "  primal      min eigenvalue " << sci(pc.min_eigenvalue) << ", trace error "
        << sci(pc.trace_error) << ", max edge entry " << sci(pc.max_edge_entry)
        << (pc.ok ? "  ok" : "  FAILED") << '\n';
  }
  if (!pc.ok) {
    err << "error: primal certificate does not verify\n";
    return kVerificationFailed;
  }
  return kOk;
}

void print_vector(std::ostream& out, std::span<const double> v) {
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << fixed7(v[i]);
  out << ')';
}

void print_model(std::ostream& out, const ProjectorModel& m) {
  for (std::size_t i = 0; i < m.vectors.size(); ++i) {
    out << "  " << m.labels[i] << "  ";
    print_vector(out, m.vectors[i]);
    out << "  p = " << fixed7(m.probability(i)) << '\n';
  }
}

int cmd_realize(const std::string& kind, const Options& o, std::ostream& out) {
  if (kind == "kcbs") {
    const auto r = kcbs_realization();
    if (o.json()) {
      print_json(out, to_json(r));
      return kOk;
    }
    out << "kcbs qutrit model, state (1, 0, 0), cos(theta) = " << fixed7(r.cos_theta) << '\n';
    for (std::size_t j = 0; j < r.umbrella.size(); ++j) {
      out << "  v" << j + 1 << " = ";
      print_vector(out, r.umbrella[j]);
      out << '\n';
    }
    out << "S_KCBS events\n";
    print_model(out, r.model);
    out << "S'_KCBS events\n";
    print_model(out, r.negated);
    double worst = 0.0;
    for (double x : r.adjacent_residuals) worst = std::max(worst, x);
    out << "S = " << fixed7(r.s_value) << "  S' = " << fixed7(r.s_prime_value)
        << "  kappa = " << fixed7(r.kappa) << '\n';
    out << "max |<v_j|v_j+1>| = " << sci(worst) << '\n';
    return kOk;
  }
  const auto r = chsh_realization();
  if (o.json()) {
    print_json(out, to_json(r));
    return kOk;
  }
  out << "chsh two-qubit model, state (|00> + |11>)/sqrt(2)\n";
  for (std::size_t j = 0; j < 4; ++j)
    out << "  A" << j + 1 << " on qubit " << r.qubit[j] + 1 << ", angle "
        << fixed7(r.angles[j] * 180.0 / std::numbers::pi) << " deg\n";
  const char* pairs[] = {"A1A2", "A2A3", "A3A4", "A4A1"};
  for (std::size_t k = 0; k < 4; ++k) {
    out << "  <" << pairs[k] << "> = " << fixed7(r.correlators[k]) << "  (p++, p+-, p-+, p--) = ";
    print_vector(out, r.joint[k]);
    out << '\n';
  }
  out << "S_CHSH events\n";
  print_model(out, r.model);
  out << "beta = " << fixed7(r.beta) << "  S = " << fixed7(r.s_value) << '\n';
  return kOk;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  const auto checks = reproduction_checks(o.tol);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (o.json()) {
    Json a = Json::array();
    for (const auto& c : checks)
      a.push_back({{"name", c.name}, {"value", c.value}, {"expected", c.expected}, {"pass", c.pass}});
    print_json(out, Json{{"checks", a}, {"pass", all}});
  } else {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
          << c.value << "  (expected " << c.expected << ")\n";
    }
    out << (all ? "all checks pass" : "some checks FAIL") << '\n';
  }
  if (!all) err << "error: reproduction checks failed\n";
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exclusivity graphs: classical, Kolmogorov, theta and E-principle bounds",
               "exclusivity"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--tol", o.tol, "theta duality-gap target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string target, kind, sets_path, graph_path, realize_kind;
  bool dump = false;
  auto* bounds = app.add_subcommand("bounds", "all bounds of a scenario file or built-in name");
  bounds->add_option("scenario", target, "file, or kcbs|chsh|specker")->required();
  auto* verify = app.add_subcommand("verify", "replay an exclusivity-principle derivation");
  verify->add_option("kind", kind)->required()->check(CLI::IsMember({"kcbs", "chsh", "specker"}));
  verify->add_option("--sets", sets_path, "read the event sets from a set file");
  verify->add_flag("--dump-sets", dump, "write the built-in event sets as a set file");
  auto* theta = app.add_subcommand("theta", "Lovasz theta of a graph file");
  theta->add_option("graph", graph_path)->required();
  auto* realize = app.add_subcommand("realize", "explicit quantum model");
  realize->add_option("kind", realize_kind)->required()->check(CLI::IsMember({"kcbs", "chsh"}));
  auto* report = app.add_subcommand("report", "reproduce every number with pass/fail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*bounds) return cmd_bounds(target, o, out, err);
    if (*verify) return cmd_verify(kind, sets_path, dump, o, out, err);
    if (*theta) return cmd_theta(graph_path, o, out, err);
    if (*realize) return cmd_realize(realize_kind, o, out);
    if (*report) return cmd_report(o, out, err);
  } catch (const ThetaConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const ParseError& e) {
    err << "error: ";
    if (e.line()) err << "line " << e.line() << ": ";
    err << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    // ScenarioError, SizeLimitError, invalid_argument, out_of_range
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace excl::cli
