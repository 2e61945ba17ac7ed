#pragma once

// Scalar special functions: Euler gamma, the Mittag-Leffler series and the
// generalized ML function e_{a,b}(t; lambda) = t^{b-1} E_{a,b}(-t^a lambda).

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "fracquad/errors.hpp"
#include "fracquad/types.hpp"

namespace fracquad {

/// Largest |z| accepted by the double-precision series.
inline constexpr double kSeriesZmax = 5.0;

/// Series/partial-fraction switch used by gml(): series when |t^a lambda| <= this.
inline constexpr double kSeriesRouteThreshold = 1.0;

/// Hard cap on the number of series terms.
inline constexpr int kSeriesMaxTerms = 10000;

/// Arguments of e_{a,b}(t; lambda).
struct MLArgs {
  double alpha = 1.0;
  double beta = 1.0;
  double t = 0.0;
  cplx lam = 0.0;

  /// Throws DomainError when the invariants are violated.
  void validate() const;
};

/// Euler gamma. Throws DomainError at the poles 0, -1, -2, ...
double gamma(double x);

namespace detail {

/// Compensated (Kahan) accumulator.
template <typename T>
struct KahanSum {
  T sum{};
  T carry{};
  void add(const T& x) {
    T y = x - carry;
    T s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
};

template <typename Real>
Real reciprocal_gamma(const Real& x) {
  using std::floor;
  using std::tgamma;
  if (x <= 0 && floor(x) == x) return Real(0);
  return Real(1) / tgamma(x);
}

}  // namespace detail

/// Truncated Mittag-Leffler series E_{a,b}(z) = sum_k z^k / Gamma(a k + b).
///
/// Reference oracle for every kernel evaluation. Summation is in ascending k
/// with compensated accumulation. Terminates once the current term and a
/// geometric tail bound both fall below tol * |sum|. The scalar type is a
/// template parameter so tests can run it in extended precision; for such
/// types pass a larger `zmax` explicitly.
template <typename Real>
std::complex<Real> ml_series(const Real& alpha, const Real& beta, const std::complex<Real>& z,
                             const Real& tol, const Real& zmax = Real(kSeriesZmax)) {
  using std::abs;
  if (!(alpha > 0) || !(beta > 0)) throw DomainError("ml_series: alpha and beta must be positive");
  if (!(tol > 0)) throw DomainError("ml_series: tol must be positive");
  if (abs(z) > zmax) throw DomainError("ml_series: |z| exceeds the series domain");

  detail::KahanSum<Real> re, im;
  std::complex<Real> zk(1);
  Real prev_mag(0);
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    const std::complex<Real> term = zk * detail::reciprocal_gamma<Real>(alpha * k + beta);
    re.add(term.real());
    im.add(term.imag());
    const Real mag = abs(term);
    if (!(mag <= std::numeric_limits<Real>::max())) {
      throw ConvergenceError("ml_series: terms overflow before convergence");
    }
    const Real total = abs(std::complex<Real>(re.sum, im.sum));
    if (k > 0 && mag <= tol * total) {
      // Past the peak the term ratio is decreasing, so mag * r / (1 - r) bounds the tail.
      const Real ratio = prev_mag > 0 ? mag / prev_mag : Real(0);
      if (ratio < Real(0.5) && mag * ratio / (1 - ratio) <= tol * total) {
        return {re.sum, im.sum};
      }
    }
    if (k > 0 && total == 0 && mag == 0) return {re.sum, im.sum};
    prev_mag = mag;
    zk *= z;
  }
  throw ConvergenceError("ml_series: no convergence within " + std::to_string(kSeriesMaxTerms) +
                         " terms");
}

/// Real-argument overload.
template <typename Real>
Real ml_series(const Real& alpha, const Real& beta, const Real& z, const Real& tol,
               const Real& zmax = Real(kSeriesZmax)) {
  return ml_series<Real>(alpha, beta, std::complex<Real>(z, Real(0)), tol, zmax).real();
}

/// e_{a,b}(t; lambda) through the series, in the precision of Real.
template <typename Real>
Real gml_series(const Real& alpha, const Real& beta, const Real& t, const Real& lam,
                const Real& tol, const Real& zmax = Real(kSeriesZmax)) {
  using std::pow;
  if (t == 0) {
    if (beta == 1) return Real(1);
    if (beta > 1) return Real(0);
    throw DomainError("gml_series: e_{a,b}(0) diverges for b < 1");
  }
  return pow(t, beta - 1) * ml_series<Real>(alpha, beta, -pow(t, alpha) * lam, tol, zmax);
}

/// e_{a,b}(t; lambda), routed: series for |t^a lambda| <= kSeriesRouteThreshold,
/// partial fractions (N = 15) otherwise. At t = 0 returns 1 for b = 1, 0 for b > 1.
double gml(double alpha, double beta, double t, double lam);
cplx gml(double alpha, double beta, double t, cplx lam);
inline cplx gml(const MLArgs& a) { return gml(a.alpha, a.beta, a.t, a.lam); }

}  // namespace fracquad
