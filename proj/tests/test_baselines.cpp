#include <cmath>

#include <gtest/gtest.h>

#include "fracquad/baselines.hpp"
#include "fracquad/harness.hpp"

using namespace fracquad;

namespace {

double pde_error(const Trajectory<Vector>& traj, double alpha, double p, int M) {
  if (!traj.meta.stable) return std::numeric_limits<double>::infinity();
  return (traj.terminal() - exact_pde_semidiscrete(1.0, alpha, p, M)).cwiseAbs().maxCoeff();
}

LinearFDEProblem<double> classical(std::function<double(double)> f) {
  LinearFDEProblem<double> p;
  p.alpha = 1.0;
  p.coeff = 0.0;
  p.init = {0.5};
  p.forcing = std::move(f);
  return p;
}

}  // namespace

TEST(BaselineNames, Parse) {
  EXPECT_EQ(parse_baseline("pece"), BaselineMethod::pece);
  EXPECT_EQ(parse_baseline("pi-trapezoidal"), BaselineMethod::pi_trapezoidal);
  EXPECT_EQ(parse_baseline("pi"), BaselineMethod::pi_trapezoidal);
  EXPECT_THROW(parse_baseline("rk4"), ConfigError);
  EXPECT_EQ(to_string(BaselineMethod::pece), "pece");
  EXPECT_EQ(to_string(BaselineMethod::pi_trapezoidal), "pi-trapezoidal");
  EXPECT_THROW((BaselineConfig{BaselineMethod::pece, 0.0}.validate()), DomainError);
}

TEST(Pece, SmoothScalar) {
  const auto p = TestProblem::t1(0.5, 6.0).scalar_problem();
  const double ref = exact_t1(1.0, 0.5, 3.0, 6.0, 1.0);
  const double ea = std::abs(solve_pece(p, 1.0 / 64.0).terminal() - ref);
  const double eb = std::abs(solve_pece(p, 1.0 / 128.0).terminal() - ref);
  EXPECT_GT(eb, 9.31e-5 / 2.0);
  EXPECT_LT(eb, 9.31e-5 * 2.0);
  EXPECT_NEAR(eoc(ea, eb), 1.676, 0.1);
}

TEST(Pece, MolBlowUp) {
  const auto p = mol_discretize(8, 3.0, 0.8);
  const auto traj = solve_pece(p, 0.125);
  EXPECT_GT(pde_error(traj, 0.8, 3.0, 8), 1e6);
}

TEST(Pece, NonFiniteIsFlagged) {
  auto p = TestProblem::t1(0.5, 2.0, 1e80).scalar_problem();
  BaselineConfig cfg{BaselineMethod::pece, 1.0 / 64.0};
  const auto traj = solve_baseline(p, cfg);
  EXPECT_FALSE(traj.meta.stable);
  EXPECT_GT(traj.meta.first_nonfinite_step, 0);
  EXPECT_EQ(traj.steps(), 64);
}

TEST(Pece, ClassicalSecondOrder) {
  auto p = classical([](double t) { return std::cos(3.0 * t); });
  const double ref = 0.5 + std::sin(3.0) / 3.0;
  const double ea = std::abs(solve_pece(p, 1.0 / 64.0).terminal() - ref);
  const double eb = std::abs(solve_pece(p, 1.0 / 128.0).terminal() - ref);
  EXPECT_NEAR(eoc(ea, eb), 2.0, 0.05);
}

TEST(PiTrapezoidal, Mol) {
  for (auto [alpha, M, err, order] : {std::tuple{0.8, 8, 1.21e-7, 1.815}, std::tuple{0.6, 16, 8.60e-7, 1.604}}) {
    const auto p = mol_discretize(M, 3.0, alpha);
    const double ea = pde_error(solve_pi_trapezoidal(p, 1.0 / 512.0), alpha, 3.0, M);
    const double eb = pde_error(solve_pi_trapezoidal(p, 1.0 / 1024.0), alpha, 3.0, M);
    EXPECT_GT(eb, err / 2.0);
    EXPECT_LT(eb, err * 2.0);
    EXPECT_NEAR(eoc(ea, eb), order, 0.05);
    EXPECT_NEAR(eoc(ea, eb), 1.0 + alpha, 0.05);
  }
}

TEST(PiTrapezoidal, ClassicalLinearExact) {
  auto p = classical([](double t) { return 2.0 - 3.0 * t; });
  const auto traj = solve_pi_trapezoidal(p, 0.1);
  for (long n = 0; n <= traj.steps(); ++n) {
    const double t = traj.times[n];
    EXPECT_NEAR(traj.values[n], 0.5 + 2.0 * t - 1.5 * t * t, 1e-14);
  }
}

TEST(PiTrapezoidal, ClassicalSecondOrder) {
  auto p = classical([](double t) { return std::exp(t); });
  const double ref = 0.5 + std::exp(1.0) - 1.0;
  const double ea = std::abs(solve_pi_trapezoidal(p, 1.0 / 64.0).terminal() - ref);
  const double eb = std::abs(solve_pi_trapezoidal(p, 1.0 / 128.0).terminal() - ref);
  EXPECT_NEAR(eoc(ea, eb), 2.0, 0.05);
}

TEST(PiTrapezoidal, Singular) {
  LinearFDEProblem<double> p;
  p.alpha = 1.0;
  p.coeff = -std::tgamma(3.0) / 0.5;
  p.init = {1.0};
  p.forcing = [](double) { return 0.0; };
  EXPECT_THROW(solve_pi_trapezoidal(p, 0.5), SingularError);
}

TEST(StabilityBoundary, PeceVersusCq) {
  const int M = 8;
  const double alpha = 0.8, dx = 1.0 / (M + 1.0);
  const auto p = mol_discretize(M, 3.0, alpha);
  for (double h : {0.125, 1.0 / 16.0, 1.0 / 32.0}) {
    ASSERT_GE(std::pow(h, alpha), dx * dx);
    const double pece = pde_error(solve_pece(p, h), alpha, 3.0, M);
    EXPECT_TRUE(!std::isfinite(pece) || pece > 1.0) << h;
    const double cq = pde_error(solve_exponential_cq(p, NodeSet::preset("opt2"), h), alpha, 3.0, M);
    EXPECT_LT(cq, 1e-3) << h;
  }
}
