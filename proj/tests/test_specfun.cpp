#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fracquad/kernels.hpp"
#include "fracquad/specfun.hpp"
#include "support/oracles.hpp"

using namespace fracquad;

namespace {

double scaled_error(double got, double want, double beta, double t) {
  const double scale = std::max(std::abs(want), std::pow(t, beta - 1.0) / std::tgamma(beta));
  return std::abs(got - want) / scale;
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_DOUBLE_EQ(fracquad::gamma(1.0), 1.0);
  EXPECT_NEAR(fracquad::gamma(0.5), 1.7724538509055160, 1e-15);
  EXPECT_NEAR(fracquad::gamma(5.0), 24.0, 1e-13);
}

TEST(Gamma, Poles) {
  EXPECT_THROW(fracquad::gamma(0.0), DomainError);
  EXPECT_THROW(fracquad::gamma(-1.0), DomainError);
  EXPECT_THROW(fracquad::gamma(-7.0), DomainError);
  EXPECT_NO_THROW(fracquad::gamma(-0.5));
}

TEST(Gamma, AgainstExtendedPrecision) {
  using oracle::mp;
  for (double x = 0.1; x < 172.0; x *= 1.37) {
    const double want = static_cast<double>(boost::multiprecision::tgamma(mp(x)));
    EXPECT_LE(std::abs(fracquad::gamma(x) - want) / want, 1e-14) << x;
  }
}

TEST(MlSeries, ZeroArgument) {
  for (double a : {0.3, 0.5, 1.0, 1.7}) {
    for (double b : {0.5, 1.0, 2.5, 4.0}) {
      EXPECT_NEAR(ml_series(a, b, 0.0, 1e-15) * std::tgamma(b), 1.0, 1e-15);
    }
  }
}

TEST(MlSeries, Exponential) {
  EXPECT_NEAR(ml_series(1.0, 1.0, -1.0, 1e-15), 0.36787944117144233, 1e-16);
}

TEST(MlSeries, HalfOrderAgainstOracle) {
  const double want = oracle::ml(0.5, 0.5, -1.0);
  EXPECT_NEAR(ml_series(0.5, 0.5, -1.0, 1e-15), want, 1e-14);
  // E_{1/2,1/2}(-1) = 1/sqrt(pi) - exp(1) erfc(1)
  EXPECT_NEAR(want, 1.0 / std::sqrt(std::numbers::pi) - std::exp(1.0) * std::erfc(1.0), 1e-15);
}

TEST(MlSeries, ComplexArgument) {
  const cplx z(0.3, -0.8);
  const cplx v = ml_series<double>(1.0, 1.0, z, 1e-15);
  EXPECT_LE(std::abs(v - std::exp(z)), 1e-15);
}

TEST(MlSeries, Errors) {
  EXPECT_THROW(ml_series(0.5, 1.0, -6.0, 1e-15), DomainError);
  EXPECT_THROW(ml_series(0.0, 1.0, -1.0, 1e-15), DomainError);
  EXPECT_THROW(ml_series(0.5, -1.0, -1.0, 1e-15), DomainError);
  EXPECT_THROW(ml_series(0.5, 1.0, -1.0, 0.0), DomainError);
  EXPECT_THROW(ml_series(0.5, 1.0, -40.0, 1e-16, 100.0), ConvergenceError);
}

TEST(MlArgs, Validate) {
  EXPECT_NO_THROW((MLArgs{0.5, 1.0, 0.0, 2.0}.validate()));
  EXPECT_THROW((MLArgs{0.0, 1.0, 1.0, 2.0}.validate()), DomainError);
  EXPECT_THROW((MLArgs{0.5, 0.0, 1.0, 2.0}.validate()), DomainError);
  EXPECT_THROW((MLArgs{0.5, 1.0, -1.0, 2.0}.validate()), DomainError);
  EXPECT_THROW((MLArgs{0.5, 0.7, 0.0, 2.0}.validate()), DomainError);
}

TEST(Gml, AtZero) {
  for (double a : {0.4, 1.0, 1.6}) {
    EXPECT_EQ(gml(a, 1.0, 0.0, 3.7), 1.0);
    EXPECT_EQ(gml(a, 2.3, 0.0, 3.7), 0.0);
    EXPECT_THROW(gml(a, 0.8, 0.0, 3.7), DomainError);
  }
}

TEST(Gml, ScalingExample) {
  const double h = 0.5, a = 0.7, b = 1.4, t = 2.0, lam = 3.0;
  const double lhs = gml(a, b, h * t, lam);
  const double rhs = std::pow(h, b - 1.0) * gml(a, b, t, std::pow(h, a) * lam);
  EXPECT_LE(std::abs(lhs - rhs) / std::abs(lhs), 1e-12);
}

TEST(Gml, ExponentialOnNegativeAxis) {
  for (double x = 0.0; x <= 30.0; x += 0.25) {
    EXPECT_NEAR(gml(1.0, 1.0, 1.0, x), std::exp(-x), 1e-13) << x;
  }
}

TEST(Gml, BothRoutesAgainstOracle) {
  for (double a : {0.5, 0.8, 1.5}) {
    for (double b : {a, a + 1.0, 1.0}) {
      for (double t : {0.5, 1.0, 3.0}) {
        for (double z : {0.0, 0.2, 0.9, 2.0, 10.0}) {
          if (!oracle::in_domain(a, std::pow(t, a) * z)) continue;
          const double want = oracle::gml(a, b, t, z);
          EXPECT_LE(scaled_error(gml(a, b, t, z), want, b, t), 1e-11)
              << a << " " << b << " " << t << " " << z;
        }
      }
    }
  }
}

TEST(Gml, ComplexLambdaConjugateSymmetry) {
  const cplx lam(2.0, 0.5);
  const cplx v = gml(0.6, 1.0, 1.5, lam);
  const cplx w = gml(0.6, 1.0, 1.5, std::conj(lam));
  EXPECT_LE(std::abs(v - std::conj(w)), 1e-13);
}
