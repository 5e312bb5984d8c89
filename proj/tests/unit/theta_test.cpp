#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "exclusivity/classical.hpp"
#include "exclusivity/cliques.hpp"
#include "exclusivity/builtin_scenarios.hpp"
#include "exclusivity/theta.hpp"
#include "oracles.hpp"

using namespace excl;

namespace {

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

double inner(const SymMatrix& a, const SymMatrix& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) s += a(i, j) * b(i, j);
  return s;
}

SymMatrix minus(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i; j < a.order(); ++j) out.set(i, j, a(i, j) - b(i, j));
  return out;
}

}  // namespace

TEST(Jacobi, ReconstructionUpTo50) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 2, 5, 13, 30, 50}) {
    const SymMatrix m = random_symmetric(rng, n);
    const auto e = jacobi_eigen(m);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
    const SymMatrix r = reconstruct(e);
    EXPECT_LE(minus(r, m).dense().max_abs(), 1e-10 * m.dense().max_abs()) << n;
    // Q is orthogonal.
    const Matrix qtq = e.vectors.transposed() * e.vectors;
    EXPECT_LE((qtq - Matrix::identity(n)).max_abs(), 1e-12) << n;
  }
}

TEST(Jacobi, KnownSpectrum) {
  SymMatrix m(2);
  m.set(0, 0, 2);
  m.set(1, 1, 2);
  m.set(0, 1, 1);
  const auto e = jacobi_eigen(m);
  EXPECT_NEAR(e.values[0], 1, 1e-14);
  EXPECT_NEAR(e.values[1], 3, 1e-14);
}

TEST(Jacobi, WarmStartMatchesColdStart) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1, 4, 17, 30}) {
    const SymMatrix m = random_symmetric(rng, n);
    // Start from the eigenvectors of a nearby matrix, as the solver does.
    SymMatrix near = m;
    for (std::size_t i = 0; i < n; ++i) near.set(i, i, m(i, i) + 1e-3 * double(i));
    const auto start = jacobi_eigen(near).vectors;
    const auto warm = jacobi_eigen(m, start);
    const auto cold = jacobi_eigen(m);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(warm.values[i], cold.values[i], 1e-10) << n;
    EXPECT_LE(minus(reconstruct(warm), m).dense().max_abs(), 1e-10 * m.dense().max_abs()) << n;
    // An arbitrary orthogonal start also works.
    const auto any = jacobi_eigen(m, jacobi_eigen(random_symmetric(rng, n)).vectors);
    EXPECT_LE(minus(reconstruct(any), m).dense().max_abs(), 1e-10 * m.dense().max_abs()) << n;
  }
  EXPECT_THROW(jacobi_eigen(SymMatrix(3), Matrix::identity(2)), std::invalid_argument);
}

TEST(PsdProject, Examples) {
  SymMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  EXPECT_LE(minus(psd_project(id), id).dense().max_abs(), 1e-15);
  SymMatrix d(2);
  d.set(0, 0, 1);
  d.set(1, 1, -1);
  const SymMatrix p = psd_project(d);
  EXPECT_NEAR(p(0, 0), 1, 1e-15);
  EXPECT_NEAR(p(1, 1), 0, 1e-15);
  EXPECT_NEAR(p(0, 1), 0, 1e-15);
}

TEST(PsdProject, OptimalityConditions) {
  // R is the Frobenius projection of M onto the PSD cone iff R >= 0,
  // R - M >= 0 and <R, R - M> = 0.
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const SymMatrix m = random_symmetric(rng, 6);
    const SymMatrix r = psd_project(m);
    const SymMatrix gap = minus(r, m);
    EXPECT_GE(min_eigenvalue(r), -1e-12);
    EXPECT_GE(min_eigenvalue(gap), -1e-10);
    EXPECT_NEAR(inner(r, gap), 0, 1e-10);
    // Nothing sampled nearby does better.
    const double best = gap.frobenius_norm();
    for (int k = 0; k < 50; ++k) {
      const SymMatrix z = random_symmetric(rng, 6);
      SymMatrix cand(6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i; j < 6; ++j) cand.set(i, j, r(i, j) + 0.05 * z(i, j));
      const SymMatrix q = psd_project(cand);
      EXPECT_GE(minus(q, m).frobenius_norm(), best - 1e-12);
    }
  }
}

TEST(Theta, BuiltinGraphs) {
  const auto c5 = lovasz_theta(cycle_graph(5));
  EXPECT_NEAR(c5.value, std::sqrt(5.0), 1e-6);
  EXPECT_NEAR(c5.value, 2.2360680, 1e-6);
  EXPECT_LE(c5.gap, 1e-7);
  const auto chsh = lovasz_theta(circulant(8, {1, 4}));
  EXPECT_NEAR(chsh.value, 2 + std::sqrt(2.0), 1e-6);
  EXPECT_LE(chsh.gap, 1e-7);
  const auto direct = lovasz_theta(build_exclusivity_graph(chsh_events(), chsh_scenario()));
  EXPECT_NEAR(direct.value, 3.4142136, 1e-6);
}

TEST(Theta, ExtremeGraphs) {
  for (std::size_t n : {1, 2, 6, 10}) {
    EXPECT_NEAR(lovasz_theta(complete_graph(n)).value, 1, 1e-6) << n;
    EXPECT_NEAR(lovasz_theta(Graph(n)).value, static_cast<double>(n), 1e-6) << n;
  }
}

TEST(Theta, CertificatesAndDuality) {
  for (const Graph& g : {cycle_graph(5), circulant(8, {1, 4}), cycle_graph(7)}) {
    const auto r = lovasz_theta(g);
    const auto check = verify_primal_certificate(g, r.primal, 1e-8);
    EXPECT_TRUE(check.ok);
    EXPECT_NEAR(check.objective, r.value, 1e-12);
    // The primal is feasible, the dual multipliers give an upper bound.
    const double ub = dual_bound(g, r.edge_multipliers);
    EXPECT_NEAR(ub, r.dual_value, 1e-12);
    EXPECT_LE(r.value, ub + 1e-12);
    EXPECT_NEAR(std::abs(r.value - r.dual_value), r.gap, 1e-15);
  }
}

TEST(Theta, OddCycles) {
  EXPECT_NEAR(odd_cycle_theta(5), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(odd_cycle_theta(3), 1, 1e-15);
  EXPECT_NEAR(odd_cycle_theta(7), 3.3176672, 1e-7);
  EXPECT_THROW(odd_cycle_theta(6), std::invalid_argument);
  EXPECT_THROW(odd_cycle_theta(1), std::invalid_argument);
  for (std::size_t n : {5, 7, 9, 11})
    EXPECT_NEAR(lovasz_theta(cycle_graph(n)).value, odd_cycle_theta(n), 1e-6) << n;
}

TEST(Theta, SandwichOnRandomGraphs) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 10, 0.4);
    const auto r = lovasz_theta(g);
    const double alpha = static_cast<double>(oracle::alpha(g));
    const double clique = static_cast<double>(clique_lp_max(g));
    EXPECT_LE(alpha, r.value + 1e-6);
    EXPECT_LE(r.value, clique + 1e-6);
    EXPECT_LE(r.gap, 1e-7);
  }
}

TEST(Theta, ProductOfPentagons) {
  const Graph c5 = cycle_graph(5);
  const auto r = lovasz_theta(disjunctive_product(c5, c5));
  EXPECT_NEAR(r.value, 5, 1e-6);
}

TEST(Theta, Errors) {
  EXPECT_THROW(lovasz_theta(Graph(51)), SizeLimitError);
  ThetaOptions o;
  o.tol = 1e-10;
  EXPECT_THROW(lovasz_theta(cycle_graph(5), o), std::invalid_argument);
  o = ThetaOptions{};
  o.max_iterations = 20;
  try {
    lovasz_theta(cycle_graph(7), o);
    FAIL() << "expected non-convergence";
  } catch (const ThetaConvergenceError& e) {
    EXPECT_GT(e.best().gap, 1e-7);
    EXPECT_LE(e.best().value, odd_cycle_theta(7) + 1e-9);
    EXPECT_GE(e.best().dual_value, odd_cycle_theta(7) - 1e-9);
  }
  EXPECT_EQ(lovasz_theta(Graph(0)).value, 0);
}
