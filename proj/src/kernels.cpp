#include "fracquad/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "fracquad/errors.hpp"
#include "fracquad/specfun.hpp"

namespace fracquad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxGaussPoints = 48;
constexpr int kMaxLagGaussPoints = 24;
constexpr int kMatrixSeriesMaxTerms = 400;

double zero_time_value(double beta) {
  if (beta == 1.0) return 1.0;
  if (beta > 1.0) return 0.0;
  throw DomainError("e_{a,b}(0) diverges for b < 1");
}

double op_norm1(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
}

GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_01(int n) {
  static const std::array<GaussRule, kMaxGaussPoints + 1> rules = [] {
    std::array<GaussRule, kMaxGaussPoints + 1> r;
    for (int i = 1; i <= kMaxGaussPoints; ++i) r[i] = make_gauss_rule(i);
    return r;
  }();
  if (n < 1 || n > kMaxGaussPoints) throw DomainError("gauss_legendre_01: n out of range");
  return rules[n];
}

int gauss_points_for_lag(long j, int count) {
  const double a = 2.0 * static_cast<double>(j) - 1.0;
  const double rho = a + std::sqrt(a * a - 1.0);
  int q = static_cast<int>(std::ceil(19.0 * std::log(10.0) / (2.0 * std::log(rho)))) + 1;
  q = std::max(q, count / 2 + 4);
  return std::min(q, kMaxLagGaussPoints);
}

MLKernel::MLKernel(double alpha, const RationalApproximation& rat) : alpha_(alpha), rat_(rat) {
  if (!(alpha > 0.0) || !(alpha < 2.0)) throw DomainError("MLKernel: alpha must lie in (0, 2)");
  tau_alpha_.reserve(rat_.degree);
  log_tau_.reserve(rat_.degree);
  for (const cplx& tau : rat_.poles) {
    const cplx lt = std::log(tau);
    log_tau_.push_back(lt);
    tau_alpha_.push_back(std::exp(alpha_ * lt));
  }
}

cplx MLKernel::tau_power(int k, double p) const { return std::exp(p * log_tau_[k]); }

cplx MLKernel::pole_correction(double beta, double t, cplx z) const {
  if (alpha_ <= 1.0) return 0.0;
  const cplx c = std::pow(t, alpha_) * z;
  const double mag = std::abs(c);
  if (mag == 0.0) return 0.0;
  const double theta = std::arg(-c);
  const double log_r = std::log(mag) / alpha_;
  cplx acc = 0.0;
  for (int m = -2; m <= 2; ++m) {
    const double phi = (theta + 2.0 * kPi * m) / alpha_;
    if (!(std::abs(phi) < kPi)) continue;
    const cplx root = std::polar(std::exp(log_r), phi);
    const cplx root_pow = std::exp((1.0 - beta) * cplx(log_r, phi));
    acc += (std::exp(root) - rat_(root)) * root_pow / alpha_;
  }
  return std::pow(t, beta - 1.0) * acc;
}

cplx MLKernel::pf(double beta, double t, cplx z) const {
  if (!(t > 0.0)) throw DomainError("MLKernel::pf: t must be positive");
  const double ta = std::pow(t, alpha_);
  // extended accumulator: the terms are much larger than their sum
  long double re = 0.0L, im = 0.0L;
  for (int k = 0; k < rat_.degree; ++k) {
    const cplx den = tau_alpha_[k] + ta * z;
    if (std::abs(den) < kDenominatorFloor) throw SingularError("MLKernel::pf: singular denominator");
    const cplx term = rat_.residues[k] * tau_power(k, alpha_ - beta) / den;
    re += term.real();
    im += term.imag();
  }
  const cplx acc(static_cast<double>(re), static_cast<double>(im));
  return -std::pow(t, beta - 1.0) * acc + pole_correction(beta, t, z);
}

double MLKernel::pf(double beta, double t, double z) const {
  if (!(t > 0.0)) throw DomainError("MLKernel::pf: t must be positive");
  const double ta = std::pow(t, alpha_);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < rat_.upper.size(); ++i) {
    const int k = rat_.upper[i];
    const cplx den = tau_alpha_[k] + ta * z;
    if (std::abs(den) < kDenominatorFloor) throw SingularError("MLKernel::pf: singular denominator");
    acc += rat_.upper_weight[i] * (rat_.residues[k] * tau_power(k, alpha_ - beta) / den).real();
  }
  return -std::pow(t, beta - 1.0) * static_cast<double>(acc) + pole_correction(beta, t, cplx(z)).real();
}

PoleResolvents MLKernel::resolvents(double t, const Matrix& w) const {
  if (!(t > 0.0)) throw DomainError("MLKernel::resolvents: t must be positive");
  if (w.rows() != w.cols()) throw DomainError("MLKernel::resolvents: matrix must be square");
  const double ta = std::pow(t, alpha_);
  const Eigen::Index n = w.rows();
  const CMatrix x = (ta * w).cast<cplx>();
  PoleResolvents res;
  res.t = t;
  res.inv.reserve(rat_.upper.size());
  for (int k : rat_.upper) {
    CMatrix m = x;
    m.diagonal().array() += tau_alpha_[k];
    Eigen::PartialPivLU<CMatrix> lu(m);
    if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
      throw SingularError("MLKernel::resolvents: singular per-pole system");
    }
    res.inv.push_back(lu.solve(CMatrix::Identity(n, n)));
  }
  return res;
}

Matrix MLKernel::combine(const PoleResolvents& res, double beta) const {
  const Eigen::Index n = res.inv.empty() ? 0 : res.inv.front().rows();
  Matrix acc = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < rat_.upper.size(); ++i) {
    const int k = rat_.upper[i];
    const cplx coef = rat_.upper_weight[i] * rat_.residues[k] * tau_power(k, alpha_ - beta);
    acc += (coef * res.inv[i]).real();
  }
  return -std::pow(res.t, beta - 1.0) * acc;
}

Matrix MLKernel::pole_correction(double beta, double t, const Matrix& w) const {
  const Eigen::Index n = w.rows();
  if (alpha_ <= 1.0) return Matrix::Zero(n, n);
  Eigen::ComplexEigenSolver<CMatrix> es(w.cast<cplx>());
  if (es.info() != Eigen::Success) throw ConvergenceError("MLKernel: eigendecomposition failed");
  const CMatrix& v = es.eigenvectors();
  Eigen::VectorXcd g(n);
  for (Eigen::Index i = 0; i < n; ++i) g[i] = pole_correction(beta, t, es.eigenvalues()[i]);
  if (g.cwiseAbs().maxCoeff() == 0.0) return Matrix::Zero(n, n);
  Eigen::PartialPivLU<CMatrix> lu(v);
  const CMatrix vinv = lu.solve(CMatrix::Identity(n, n));
  return (v * g.asDiagonal() * vinv).real();
}

Matrix MLKernel::pf(double beta, double t, const Matrix& w) const {
  return combine(resolvents(t, w), beta) + pole_correction(beta, t, w);
}

double MLKernel::eval(double beta, double t, double z) const {
  if (t == 0.0) return zero_time_value(beta);
  const double x = std::pow(t, alpha_) * z;
  if (std::abs(x) <= kSeriesRouteThreshold) {
    return std::pow(t, beta - 1.0) * ml_series<double>(alpha_, beta, -x, 1e-16);
  }
  if (beta > 1.0 + alpha_) {
    const int m = static_cast<int>(std::ceil((beta - 1.0 - alpha_) / alpha_));
    double b = beta - m * alpha_;
    double v = pf(b, t, z);
    for (int i = 0; i < m; ++i, b += alpha_) v = (std::pow(t, b - 1.0) / gamma(b) - v) / z;
    return v;
  }
  return pf(beta, t, z);
}

cplx MLKernel::eval(double beta, double t, cplx z) const {
  if (t == 0.0) return zero_time_value(beta);
  const cplx x = std::pow(t, alpha_) * z;
  if (std::abs(x) <= kSeriesRouteThreshold) {
    return std::pow(t, beta - 1.0) * ml_series<double>(alpha_, beta, -x, 1e-16);
  }
  if (beta > 1.0 + alpha_) {
    const int m = static_cast<int>(std::ceil((beta - 1.0 - alpha_) / alpha_));
    double b = beta - m * alpha_;
    cplx v = pf(b, t, z);
    for (int i = 0; i < m; ++i, b += alpha_) v = (std::pow(t, b - 1.0) / gamma(b) - v) / z;
    return v;
  }
  return pf(beta, t, z);
}

Matrix MLKernel::eval(double beta, double t, const Matrix& w) const {
  if (w.rows() != w.cols()) throw DomainError("MLKernel::eval: matrix must be square");
  const Eigen::Index n = w.rows();
  if (t == 0.0) return zero_time_value(beta) * Matrix::Identity(n, n);
  const double ta = std::pow(t, alpha_);
  const Matrix x = ta * w;
  if (op_norm1(x) <= kSeriesRouteThreshold) {
    Matrix sum = Matrix::Identity(n, n) / gamma(beta);
    Matrix power = Matrix::Identity(n, n);
    double prev = 1.0;
    for (int k = 1; k < kMatrixSeriesMaxTerms; ++k) {
      power = -(power * x).eval();
      const Matrix term = power / gamma(alpha_ * k + beta);
      sum += term;
      const double mag = op_norm1(term);
      if (mag <= 1e-17 * op_norm1(sum) && mag <= prev) break;
      prev = mag;
    }
    return std::pow(t, beta - 1.0) * sum;
  }
  if (beta > 1.0 + alpha_) {
    Eigen::PartialPivLU<Matrix> lu(w);
    if (lu.rcond() > std::numeric_limits<double>::epsilon()) {
      const Matrix winv = lu.solve(Matrix::Identity(n, n));
      if (op_norm1(winv) / ta <= 1.0) {
        const int m = static_cast<int>(std::ceil((beta - 1.0 - alpha_) / alpha_));
        double b = beta - m * alpha_;
        const PoleResolvents res = resolvents(t, w);
        Matrix v = combine(res, b) + pole_correction(b, t, w);
        for (int i = 0; i < m; ++i, b += alpha_) {
          Matrix rhs = -v;
          rhs.diagonal().array() += std::pow(t, b - 1.0) / gamma(b);
          v = winv * rhs;
        }
        return v;
      }
    }
  }
  return pf(beta, t, w);
}

std::vector<double> MLKernel::r_hat(long j, double w, int count, KernelRoute route) const {
  if (j < 1) throw DomainError("r_hat: lag j must be >= 1");
  if (count < 1) throw DomainError("r_hat: count must be >= 1");
  std::vector<double> out(count, 0.0);
  const double dj = static_cast<double>(j);
  if (j >= 2 && route != KernelRoute::closed_form) {
    const GaussRule& rule = gauss_legendre_01(gauss_points_for_lag(j, count));
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double s = rule.nodes[q];
      const double e = eval(alpha_, dj - s, w);
      double sk = rule.weights[q] * e;
      for (int k = 0; k < count; ++k, sk *= s) out[k] += sk;
    }
    return out;
  }
  auto e = [&](double beta, double t) { return eval(beta, t, w); };
  std::vector<double> prev;
  if (j >= 2) {
    prev.resize(count);
    for (int l = 0; l < count; ++l) prev[l] = e(alpha_ + l + 1.0, dj - 1.0);
  }
  double fact = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) fact *= k;
    double v = e(alpha_ + k + 1.0, dj);
    if (j >= 2) {
      double inv_fact = 1.0;
      for (int l = k; l >= 0; --l) {
        if (k - l > 0) inv_fact /= (k - l);
        v -= prev[l] * inv_fact;
      }
    }
    out[k] = fact * v;
  }
  return out;
}

std::vector<Matrix> MLKernel::r_hat(long j, const Matrix& w, int count, KernelRoute route) const {
  if (j < 1) throw DomainError("r_hat: lag j must be >= 1");
  if (count < 1) throw DomainError("r_hat: count must be >= 1");
  if (w.rows() != w.cols()) throw DomainError("r_hat: matrix must be square");
  const Eigen::Index n = w.rows();
  std::vector<Matrix> out(count, Matrix::Zero(n, n));
  const double dj = static_cast<double>(j);
  if (j >= 2 && route != KernelRoute::closed_form) {
    const GaussRule& rule = gauss_legendre_01(gauss_points_for_lag(j, count));
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double s = rule.nodes[q];
      const Matrix e = eval(alpha_, dj - s, w);
      double sk = rule.weights[q];
      for (int k = 0; k < count; ++k, sk *= s) out[k] += sk * e;
    }
    return out;
  }
  auto e = [&](double beta, double t) { return eval(beta, t, w); };
  std::vector<Matrix> prev;
  if (j >= 2) {
    prev.reserve(count);
    for (int l = 0; l < count; ++l) prev.push_back(e(alpha_ + l + 1.0, dj - 1.0));
  }
  double fact = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) fact *= k;
    Matrix v = e(alpha_ + k + 1.0, dj);
    if (j >= 2) {
      double inv_fact = 1.0;
      for (int l = k; l >= 0; --l) {
        if (k - l > 0) inv_fact /= (k - l);
        v -= prev[l] * inv_fact;
      }
    }
    out[k] = fact * v;
  }
  return out;
}

cplx gml_pf(double alpha, double beta, double t, cplx z, const RationalApproximation& rat) {
  return MLKernel(alpha, rat).pf(beta, t, z);
}

double gml_pf_halved(double alpha, double beta, double t, double z,
                     const RationalApproximation& rat) {
  return MLKernel(alpha, rat).pf(beta, t, z);
}

Matrix gml_pf_matrix(double alpha, double beta, double t, const Matrix& w,
                     const RationalApproximation& rat) {
  return MLKernel(alpha, rat).pf(beta, t, w);
}

double r_hat(const KernelRequest<double>& req, const RationalApproximation& rat, KernelRoute route) {
  req.validate();
  return MLKernel(req.alpha, rat).r_hat(req.j, req.w, req.k + 1, route)[req.k];
}

Matrix r_hat_matrix(const KernelRequest<Matrix>& req, const RationalApproximation& rat,
                    KernelRoute route) {
  req.validate();
  return MLKernel(req.alpha, rat).r_hat(req.j, req.w, req.k + 1, route)[req.k];
}

void write_kernel_csv(std::ostream& os, const std::vector<KernelRow>& rows) {
  const auto old = os.precision(16);
  os << "j,k,re,im\n";
  for (const auto& r : rows) os << r.j << ',' << r.k << ',' << r.re << ',' << r.im << '\n';
  os.precision(old);
}

}  // namespace fracquad
