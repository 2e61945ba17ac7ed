#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fracquad/harness.hpp"
#include "fracquad/kernels.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/solvers.hpp"
#include "fracquad/specfun.hpp"

using namespace fracquad;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

double scale_of(double v, double beta, double t) {
  return std::max(std::abs(v), std::pow(t, beta - 1.0) / std::tgamma(beta));
}

NodeSet random_nodes(int nu) {
  while (true) {
    std::vector<double> c(nu);
    for (double& x : c) x = uniform(0.0, 1.0);
    std::sort(c.begin(), c.end());
    bool ok = true;
    for (int r = 1; r < nu; ++r) ok = ok && c[r] - c[r - 1] > 0.05;
    if (ok) return NodeSet(c);
  }
}

Matrix random_spd(int n) {
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = uniform(-1.0, 1.0);
  }
  return b * b.transpose() + 0.5 * Matrix::Identity(n, n);
}

}  // namespace

TEST(Property, ScalingIdentity) {
  for (int trial = 0; trial < 300; ++trial) {
    const double a = uniform(0.2, 1.9), b = uniform(0.3, 3.5), t = uniform(0.1, 10.0);
    const double lam = uniform(0.0, 20.0), h = uniform(0.05, 2.0);
    const MLKernel k(a);
    const double lhs = k.eval(b, t, lam);
    const double rhs = std::pow(h, b - 1.0) * k.eval(b, t / h, std::pow(h, a) * lam);
    EXPECT_LE(std::abs(lhs - rhs) / scale_of(lhs, b, t), 1e-11) << a << " " << b << " " << t << " " << lam << " " << h;
  }
}

TEST(Property, SeriesAndPartialFractionsAgree) {
  for (int trial = 0; trial < 300; ++trial) {
    const double a = uniform(0.2, 1.9), b = uniform(a, a + 1.0), t = uniform(0.1, 4.0);
    const double lam = uniform(0.0, 1.0) / std::pow(t, a);
    const double series = gml_series<double>(a, b, t, lam, 1e-16);
    const double pf = MLKernel(a).pf(b, t, lam);
    EXPECT_LE(std::abs(series - pf) / scale_of(series, b, t), 1e-11) << a << " " << b << " " << t << " " << lam;
  }
}

TEST(Property, ConjugateHalving) {
  for (int trial = 0; trial < 100; ++trial) {
    const double a = uniform(0.2, 1.9), b = uniform(0.3, 3.0), t = uniform(0.5, 20.0), z = uniform(0.0, 5.0);
    const cplx full = gml_pf(a, b, t, z);
    const double half = gml_pf_halved(a, b, t, z);
    EXPECT_LE(std::abs(full.real() - half), 1e-14 * std::max(1.0, std::abs(half)));
    EXPECT_LE(std::abs(full.imag()), 1e-13 * std::max(1.0, std::abs(full)));
  }
}

TEST(Property, VandermondeResiduals) {
  for (int trial = 0; trial < 200; ++trial) {
    const int nu = 1 + static_cast<int>(trial % 6);
    const NodeSet nodes = random_nodes(nu);
    std::vector<double> rhs(nu);
    for (double& v : rhs) v = uniform(-1.0, 1.0);
    const auto x = vandermonde_solve(nodes, rhs);
    double res = 0.0, scale = 0.0;
    for (int k = 0; k < nu; ++k) {
      double s = 0.0;
      for (int r = 0; r < nu; ++r) s += std::pow(nodes[r], k) * x[r];
      res = std::max(res, std::abs(s - rhs[k]));
      scale = std::max(scale, std::abs(rhs[k]));
    }
    double xnorm = 0.0;
    for (double v : x) xnorm = std::max(xnorm, std::abs(v));
    EXPECT_LE(res, 1e-12 * std::max(scale, xnorm));
  }
}

TEST(Property, OrderConditionResiduals) {
  for (int trial = 0; trial < 20; ++trial) {
    const double a = uniform(0.2, 1.9);
    const NodeSet nodes = random_nodes(1 + trial % 4);
    const double h = std::ldexp(1.0, -static_cast<int>(3 + trial % 5));
    const double lam = uniform(0.0, 10.0);
    const long n = std::lround(1.0 / h);
    const auto table = build_weight_table<double>(a, lam, h, n, nodes);
    for (long j = 1; j <= n; ++j) EXPECT_LE(order_residual(table, j), kWeightResidualTol);
  }
}

TEST(Property, ReflectionOfNodePolynomial) {
  for (int trial = 0; trial < 100; ++trial) {
    const NodeSet nodes = random_nodes(1 + trial % 5);
    std::vector<double> mirrored;
    for (double c : nodes.nodes) mirrored.push_back(1.0 - c);
    const double sign = nodes.nu() % 2 ? -1.0 : 1.0;
    EXPECT_NEAR(node_poly_integral(NodeSet(mirrored)), sign * node_poly_integral(nodes), 1e-15);
  }
}

TEST(Property, MatrixScalarEquivalence) {
  for (int trial = 0; trial < 10; ++trial) {
    const double a = uniform(0.3, 1.8), lam = uniform(0.0, 8.0);
    const double y0 = uniform(-1.0, 1.0), y1 = uniform(-1.0, 1.0);
    const double w = uniform(0.5, 3.0);
    LinearFDEProblem<double> s;
    s.alpha = a;
    s.coeff = lam;
    s.init = {y0};
    if (s.m() > 1) s.init.push_back(y1);
    s.forcing = [w](double t) { return std::cos(w * t) + t; };
    LinearFDEProblem<Matrix> m;
    m.alpha = a;
    m.coeff = Matrix::Constant(1, 1, lam);
    for (double v : s.init) m.init.push_back(Vector::Constant(1, v));
    m.forcing = [w](double t) { return Vector::Constant(1, std::cos(w * t) + t); };
    const NodeSet nodes = random_nodes(1 + trial % 4);
    const auto ts = solve_exponential_cq(s, nodes, 1.0 / 32.0);
    const auto tm = solve_exponential_cq(m, nodes, 1.0 / 32.0);
    for (long n = 0; n <= 32; ++n) {
      EXPECT_NEAR(ts.values[n], tm.values[n](0), 1e-13 * std::max(1.0, std::abs(ts.values[n])));
    }
  }
}

TEST(Property, DiagonalizationEquivalence) {
  for (int trial = 0; trial < 5; ++trial) {
    const int dim = 4;
    const double a = uniform(0.3, 1.8);
    const Matrix A = random_spd(dim);
    Eigen::SelfAdjointEigenSolver<Matrix> es(A);
    const Matrix V = es.eigenvectors();
    Vector u0(dim), g(dim);
    for (int i = 0; i < dim; ++i) {
      u0(i) = uniform(-1.0, 1.0);
      g(i) = uniform(-1.0, 1.0);
    }
    LinearFDEProblem<Matrix> m;
    m.alpha = a;
    m.coeff = A;
    m.init = {u0};
    if (m.m() > 1) m.init.push_back(Vector::Zero(dim));
    m.forcing = [g](double t) -> Vector { return std::sin(2.0 * t) * g; };
    const NodeSet nodes = NodeSet::preset("opt2");
    const double h = 1.0 / 64.0;
    const Vector full = solve_exponential_cq(m, nodes, h).terminal();

    const Vector c0 = V.transpose() * u0, cg = V.transpose() * g;
    Vector modal(dim);
    for (int i = 0; i < dim; ++i) {
      LinearFDEProblem<double> s;
      s.alpha = a;
      s.coeff = es.eigenvalues()(i);
      s.init = {c0(i)};
      if (s.m() > 1) s.init.push_back(0.0);
      s.forcing = [gi = cg(i)](double t) { return std::sin(2.0 * t) * gi; };
      modal(i) = solve_exponential_cq(s, nodes, h).terminal();
    }
    EXPECT_LE((V * modal - full).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Property, Superposition) {
  for (int trial = 0; trial < 10; ++trial) {
    const double a = uniform(0.3, 1.8), lam = uniform(0.0, 8.0);
    const double ya = uniform(-1.0, 1.0), yb = uniform(-1.0, 1.0);
    auto make = [&](double y0, std::function<double(double)> f) {
      LinearFDEProblem<double> p;
      p.alpha = a;
      p.coeff = lam;
      p.init = {y0};
      if (p.m() > 1) p.init.push_back(0.5 * y0);
      p.forcing = std::move(f);
      return p;
    };
    const auto f1 = [](double t) { return std::exp(-t); };
    const auto f2 = [](double t) { return t * t; };
    const NodeSet nodes = random_nodes(1 + trial % 4);
    const double h = 1.0 / 16.0;
    const auto s1 = solve_exponential_cq(make(ya, f1), nodes, h);
    const auto s2 = solve_exponential_cq(make(yb, f2), nodes, h);
    const auto s12 = solve_exponential_cq(make(ya + yb, [&](double t) { return f1(t) + f2(t); }), nodes, h);
    for (long n = 0; n <= 16; ++n) {
      EXPECT_NEAR(s12.values[n], s1.values[n] + s2.values[n], 1e-12 * std::max(1.0, std::abs(s12.values[n])));
    }
  }
}

TEST(Property, ReportRoundTrip) {
  for (int trial = 0; trial < 50; ++trial) {
    ConvergenceReport r{"p", "m", "ref", {}};
    for (int i = 0; i < 5; ++i) {
      ConvergenceRow row;
      row.h = std::ldexp(1.0, -i);
      row.error = std::exp(uniform(-40.0, 5.0));
      if (i > 0) row.eoc = uniform(-1.0, 6.0);
      row.cpu_seconds = uniform(0.0, 1.0);
      row.unstable = uniform(0.0, 1.0) < 0.2;
      r.rows.push_back(row);
    }
    EXPECT_EQ(report_from_json(to_json(r)), r);
  }
}
