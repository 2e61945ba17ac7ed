#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "fracquad/kernels.hpp"
#include "fracquad/specfun.hpp"
#include "support/oracles.hpp"

using namespace fracquad;

namespace {

Matrix laplacian(int M) {
  const double s = (M + 1.0) * (M + 1.0);
  Matrix a = Matrix::Zero(M, M);
  for (int i = 0; i < M; ++i) {
    a(i, i) = 2.0 * s;
    if (i > 0) a(i, i - 1) = -s;
    if (i + 1 < M) a(i, i + 1) = -s;
  }
  return a;
}

Matrix sine_basis(int M) {
  Matrix v(M, M);
  const double norm = std::sqrt(2.0 / (M + 1.0));
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) v(i, j) = norm * std::sin((i + 1.0) * (j + 1.0) * std::numbers::pi / (M + 1.0));
  }
  return v;
}

}  // namespace

TEST(GmlPf, ZeroArgumentIsPower) {
  EXPECT_NEAR(gml_pf(0.5, 1.5, 1.0, 0.0).real(), 1.1283791670955126, 1e-13);
}

TEST(GmlPf, AgainstSeries) {
  const double want = oracle::gml(0.8, 0.8, 2.0, 0.3);
  EXPECT_LE(std::abs(gml_pf(0.8, 0.8, 2.0, 0.3).real() - want) / std::abs(want), 1e-11);
  EXPECT_LE(std::abs(gml(0.8, 0.8, 2.0, 0.3) - want) / std::abs(want), 1e-11);
}

TEST(GmlPf, HalvingMatchesFullSum) {
  for (double a : {0.5, 0.8, 1.5}) {
    for (double b : {a, a + 1.0, 1.0}) {
      for (double t : {1.0, 2.0, 8.0}) {
        for (double z : {0.0, 0.3, 5.0}) {
          const cplx full = gml_pf(a, b, t, z);
          const double half = gml_pf_halved(a, b, t, z);
          EXPECT_LE(std::abs(full.real() - half), 1e-15 * std::max(1.0, std::abs(half)));
          EXPECT_LE(std::abs(full.imag()), 1e-13 * std::max(1.0, std::abs(full)));
        }
      }
    }
  }
}

TEST(GmlPf, KernelAccuracyGrid) {
  double worst = 0.0;
  for (double a : {0.5, 0.8, 1.5}) {
    for (double b : {a, a + 1.0, a + 2.0}) {
      for (double j : {1.0, 2.0, 8.0, 64.0}) {
        for (double z : {0.0, 0.05, 0.6}) {
          const double want = oracle::gml(a, b, j, z);
          worst = std::max(worst, std::abs(gml_pf(a, b, j, z).real() - want) / std::abs(want));
        }
      }
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(GmlPf, SingularDenominator) {
  const auto& rat = default_rational_approx();
  const double a = 0.5;
  const cplx z = -std::exp(a * std::log(rat.poles[0]));
  EXPECT_THROW(gml_pf(a, 1.0, 1.0, z, rat), SingularError);
}

TEST(GmlPf, SingularMatrix) {
  const auto& rat = default_rational_approx();
  int real_pole = -1;
  for (int k = 0; k < rat.degree; ++k) {
    if (rat.poles[k].imag() == 0.0) real_pole = k;
  }
  ASSERT_GE(real_pole, 0);
  const double a = 0.5;
  const double shift = std::exp(a * std::log(rat.poles[real_pole])).real();
  const Matrix w = -shift * Matrix::Identity(3, 3);
  EXPECT_THROW(gml_pf_matrix(a, 1.0, 1.0, w, rat), SingularError);
}

TEST(MLKernelTest, RejectsOrder) {
  EXPECT_THROW(MLKernel(0.0), DomainError);
  EXPECT_THROW(MLKernel(2.0), DomainError);
}

TEST(MLKernelTest, RecurrenceRoute) {
  const MLKernel k(0.6);
  for (double b : {2.0, 3.1, 4.5}) {
    for (double z : {2.0, 4.0}) {
      const double want = oracle::gml(0.6, b, 3.0, z);
      const double scale = std::max(std::abs(want), std::pow(3.0, b - 1.0) / std::tgamma(b));
      EXPECT_LE(std::abs(k.eval(b, 3.0, z) - want) / scale, 1e-11) << b << " " << z;
    }
  }
}

TEST(MLKernelTest, MatrixEvalMatchesEigen) {
  const int M = 8;
  const Matrix a = laplacian(M);
  const Matrix v = sine_basis(M);
  const MLKernel kern(0.7);
  for (double t : {0.01, 0.2, 1.0}) {
    for (double b : {1.0, 1.7, 3.0}) {
      Vector d(M);
      for (int i = 0; i < M; ++i) {
        const double mu = 4.0 * (M + 1.0) * (M + 1.0) *
                          std::pow(std::sin((i + 1.0) * std::numbers::pi / (2.0 * (M + 1.0))), 2);
        d(i) = kern.eval(b, t, mu);
      }
      const Matrix want = v * d.asDiagonal() * v.transpose();
      const Matrix got = kern.eval(b, t, a);
      EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-11 * std::max(1.0, want.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(RHat, ClassicalMoments) {
  const MLKernel kern(1.0);
  for (long j : {1L, 2L, 7L, 100L}) {
    for (auto route : {KernelRoute::automatic, KernelRoute::gauss_legendre}) {
      const auto r = kern.r_hat(j, 0.0, 7, route);
      for (int k = 0; k <= 6; ++k) EXPECT_NEAR(r[k], 1.0 / (k + 1.0), 1e-13) << j << " " << k;
    }
  }
  const auto r = kern.r_hat(1, 0.0, 7, KernelRoute::closed_form);
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(r[k], 1.0 / (k + 1.0), 1e-13) << k;
}

TEST(RHat, FirstLagZeroCoefficient) {
  EXPECT_NEAR(r_hat({1, 0, 0.5, 0.0}), 1.0 / std::tgamma(1.5), 1e-13);
  EXPECT_NEAR(r_hat({1, 0, 0.5, 0.0}), 1.1283791670955126, 1e-13);
}

TEST(RHat, AgainstQuadratureOracle) {
  for (double a : {0.5, 0.8, 1.5}) {
    for (long j : {1L, 2L, 17L}) {
      for (double w : {0.0, 0.1, 3.0 * std::pow(0.125, a)}) {
        const MLKernel kern(a);
        const auto got = kern.r_hat(j, w, 4);
        for (int k = 0; k <= 3; ++k) {
          const double want = oracle::r_hat_oracle({j, k, a, w}, 1e-12);
          EXPECT_LE(std::abs(got[k] - want), 1e-9 * std::max(1.0, std::abs(want)))
              << a << " " << j << " " << w << " " << k;
        }
      }
    }
  }
}

TEST(RHat, OracleClassicalCase) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_NEAR(oracle::r_hat_oracle({3, k, 1.0, 0.0}, 1e-12), 1.0 / (k + 1.0), 1e-12);
  }
}

TEST(RHat, RoutesAgree) {
  for (double a : {0.5, 1.5}) {
    const MLKernel kern(a);
    for (long j : {2L, 5L}) {
      const auto gl = kern.r_hat(j, 0.4, 5, KernelRoute::gauss_legendre);
      const auto cf = kern.r_hat(j, 0.4, 5, KernelRoute::closed_form);
      for (int k = 0; k < 5; ++k) EXPECT_NEAR(gl[k], cf[k], 1e-10 * std::max(1.0, std::abs(gl[k])));
    }
  }
}

TEST(RHat, Telescoping) {
  for (double a : {0.5, 0.8, 1.5}) {
    for (double w : {0.0, 0.2, 1.0}) {
      for (long j : {1L, 2L, 9L, 30L}) {
        const double e1 = gml_pf(a, a + 1.0, static_cast<double>(j), w).real();
        const double e0 = j == 1 ? 0.0 : gml_pf(a, a + 1.0, j - 1.0, w).real();
        EXPECT_NEAR(r_hat({j, 0, a, w}), e1 - e0, 1e-11 * std::max(1.0, std::abs(e1))) << a << " " << w << " " << j;
      }
    }
  }
}

TEST(RHat, MatrixZero) {
  const Matrix w = Matrix::Zero(3, 3);
  const Matrix r = r_hat_matrix({4, 2, 0.7, w});
  const double s = r_hat({4, 2, 0.7, 0.0});
  EXPECT_LE((r - s * Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(RHat, MatrixDiagonal) {
  Vector d(3);
  d << 0.0, 0.3, 2.5;
  const Matrix w = d.asDiagonal();
  for (long j : {1L, 3L}) {
    const Matrix r = r_hat_matrix({j, 1, 0.6, w});
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(r(i, i), r_hat({j, 1, 0.6, d(i)}), 1e-11);
      for (int c = 0; c < 3; ++c) {
        if (c != i) EXPECT_NEAR(r(i, c), 0.0, 1e-14);
      }
    }
  }
}

TEST(RHat, MatrixTridiagonalEigenbasis) {
  const int M = 8;
  const Matrix a = laplacian(M);
  const Matrix v = sine_basis(M);
  for (double alpha : {0.5, 0.8, 1.5}) {
    for (long j : {1L, 2L, 17L}) {
      for (int k : {0, 2}) {
        Vector d(M);
        for (int i = 0; i < M; ++i) {
          const double mu = 4.0 * (M + 1.0) * (M + 1.0) *
                            std::pow(std::sin((i + 1.0) * std::numbers::pi / (2.0 * (M + 1.0))), 2);
          d(i) = r_hat({j, k, alpha, mu});
        }
        const Matrix want = v * d.asDiagonal() * v.transpose();
        const Matrix got = r_hat_matrix({j, k, alpha, a});
        EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-10) << alpha << " " << j << " " << k;
      }
    }
  }
}

TEST(RHat, OneByOneMatchesScalar) {
  for (double a : {0.5, 1.5}) {
    for (double w : {0.0, 0.37, 4.0}) {
      for (long j : {1L, 2L, 12L}) {
        const Matrix m = Matrix::Constant(1, 1, w);
        for (int k = 0; k < 4; ++k) {
          EXPECT_NEAR(r_hat_matrix({j, k, a, m})(0, 0), r_hat({j, k, a, w}), 1e-14 * std::max(1.0, std::abs(r_hat({j, k, a, w}))));
        }
      }
    }
  }
}

TEST(KernelRequestTest, Validation) {
  EXPECT_THROW((KernelRequest<double>{0, 0, 0.5, 0.0}.validate()), DomainError);
  EXPECT_THROW((KernelRequest<double>{1, -1, 0.5, 0.0}.validate()), DomainError);
  EXPECT_THROW((KernelRequest<double>{1, 0, 0.0, 0.0}.validate()), DomainError);
  EXPECT_THROW((KernelRequest<Matrix>{1, 0, 0.5, Matrix::Zero(2, 3)}.validate()), DomainError);
  EXPECT_THROW(r_hat({0, 0, 0.5, 0.0}), DomainError);
}

TEST(GaussRuleTest, ExactForPolynomials) {
  for (int n : {1, 3, 8, 24}) {
    const auto& rule = gauss_legendre_01(n);
    ASSERT_EQ(static_cast<int>(rule.nodes.size()), n);
    for (int k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (int q = 0; q < n; ++q) s += rule.weights[q] * std::pow(rule.nodes[q], k);
      EXPECT_NEAR(s, 1.0 / (k + 1.0), 1e-14) << n << " " << k;
    }
  }
  EXPECT_THROW(gauss_legendre_01(0), DomainError);
  EXPECT_THROW(gauss_legendre_01(49), DomainError);
}

TEST(GaussRuleTest, PointsForLag) {
  EXPECT_GE(gauss_points_for_lag(2, 4), 6);
  EXPECT_LE(gauss_points_for_lag(2, 4), 24);
  EXPECT_LT(gauss_points_for_lag(1000, 4), gauss_points_for_lag(2, 4));
  EXPECT_GE(gauss_points_for_lag(1000, 16), 12);
}

TEST(KernelCsv, Format) {
  std::ostringstream os;
  write_kernel_csv(os, {{1, 0, 0.5, 0.0}, {2, 3, 1.0 / 3.0, -1.5e-20}});
  EXPECT_EQ(os.str(), "j,k,re,im\n1,0,0.5,0\n2,3,0.3333333333333333,-1.5e-20\n");
}
