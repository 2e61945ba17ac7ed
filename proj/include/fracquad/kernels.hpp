#pragma once

// Partial-fraction (rational Laplace inversion) evaluation of the generalized
// Mittag-Leffler function e_{a,b}(t; z) and of the dimensionless moment kernels
//
//   Rhat_{a,k}(j; w) = int_0^1 e_{a,a}(j - s; w) s^k ds
//                    = k! [ e_{a,a+k+1}(j; w) - sum_{l=0}^{k} e_{a,a+l+1}(j-1; w) / (k-l)! ]
//
// for scalar and matrix arguments. The quadrature RHS is h^a Rhat; the h^a
// factor is applied by the caller.

#include <iosfwd>
#include <vector>

#include "fracquad/errors.hpp"
#include "fracquad/rational_approx.hpp"
#include "fracquad/types.hpp"

namespace fracquad {

/// How Rhat is evaluated. All routes take e-values from MLKernel::eval.
///   closed_form     the difference formula above at every lag
///   gauss_legendre  Gauss-Legendre on the integral for j >= 2 (closed form at j = 1)
///   automatic       same as gauss_legendre
enum class KernelRoute { automatic, closed_form, gauss_legendre };

/// Singular-denominator floor for the partial-fraction terms.
inline constexpr double kDenominatorFloor = 1e-300;

template <typename W>
struct KernelRequest {
  long j = 1;  // lag, in units of h
  int k = 0;   // moment order
  double alpha = 1.0;
  W w{};       // h^a * coefficient

  void validate() const;
};

template <typename W>
void KernelRequest<W>::validate() const {
  if (j < 1) throw DomainError("KernelRequest: lag j must be >= 1");
  if (k < 0) throw DomainError("KernelRequest: moment order k must be >= 0");
  if (!(alpha > 0)) throw DomainError("KernelRequest: alpha must be positive");
  if constexpr (std::is_same_v<W, Matrix>) {
    if (w.rows() != w.cols()) throw DomainError("KernelRequest: w must be square");
  }
}

/// Per-pole resolvents (tau_k^a I + t^a W)^{-1} for the poles with Im >= 0.
struct PoleResolvents {
  double t = 0.0;
  std::vector<CMatrix> inv;
};

/// e_{a,b} evaluator for a fixed order a and rational approximation.
/// Caches tau_k^a and log tau_k; immutable and shareable across threads.
class MLKernel {
 public:
  explicit MLKernel(double alpha, const RationalApproximation& rat = default_rational_approx());

  double alpha() const { return alpha_; }
  const RationalApproximation& rational() const { return rat_; }

  /// Plain partial-fraction sum over all N poles,
  ///   -t^{b-1} sum_k r_k tau_k^{a-b} / (tau_k^a + t^a z),
  /// plus, when 1 < a < 2, the residues at the roots of tau^a + t^a z lying on
  /// the principal sheet weighted by exp(tau*) - r(tau*).
  cplx pf(double beta, double t, cplx z) const;

  /// Same for real z, summing one pole per conjugate pair.
  double pf(double beta, double t, double z) const;

  /// Matrix argument: one dense LU per pole with Im >= 0.
  Matrix pf(double beta, double t, const Matrix& w) const;

  PoleResolvents resolvents(double t, const Matrix& w) const;
  /// e_{a,b}(t; W) from precomputed resolvents (no pole-residue correction).
  Matrix combine(const PoleResolvents& res, double beta) const;

  /// Routed evaluation. Series when |t^a z| <= 1; otherwise partial fractions,
  /// lifted from b' in (1, 1+a] by e_{a,b+a} = (t^{b-1}/Gamma(b) - e_{a,b}) / z
  /// when b > 1 + a. Matrix version uses the 1-norm of t^a W and of its inverse
  /// for the same decisions.
  double eval(double beta, double t, double z) const;
  cplx eval(double beta, double t, cplx z) const;
  Matrix eval(double beta, double t, const Matrix& w) const;

  /// Rhat_{a,k}(j; w) for k = 0..count-1.
  std::vector<double> r_hat(long j, double w, int count,
                            KernelRoute route = KernelRoute::automatic) const;
  std::vector<Matrix> r_hat(long j, const Matrix& w, int count,
                            KernelRoute route = KernelRoute::automatic) const;

 private:
  cplx tau_power(int k, double p) const;  // tau_k^p, principal branch
  cplx pole_correction(double beta, double t, cplx z) const;
  Matrix pole_correction(double beta, double t, const Matrix& w) const;

  double alpha_;
  RationalApproximation rat_;
  std::vector<cplx> tau_alpha_;
  std::vector<cplx> log_tau_;
};

/// e_{a,b}(t; z) by partial fractions, complex sum over all poles.
cplx gml_pf(double alpha, double beta, double t, cplx z,
            const RationalApproximation& rat = default_rational_approx());

/// e_{a,b}(t; z) for real z, conjugate-pair halving.
double gml_pf_halved(double alpha, double beta, double t, double z,
                     const RationalApproximation& rat = default_rational_approx());

Matrix gml_pf_matrix(double alpha, double beta, double t, const Matrix& w,
                     const RationalApproximation& rat = default_rational_approx());

double r_hat(const KernelRequest<double>& req,
             const RationalApproximation& rat = default_rational_approx(),
             KernelRoute route = KernelRoute::automatic);

Matrix r_hat_matrix(const KernelRequest<Matrix>& req,
                    const RationalApproximation& rat = default_rational_approx(),
                    KernelRoute route = KernelRoute::automatic);

/// Gauss-Legendre nodes and weights on [0, 1], 1 <= n <= 48.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre_01(int n);

/// Number of Gauss-Legendre nodes used for lag j (j >= 2) and `count` moments.
int gauss_points_for_lag(long j, int count);

/// (j, k, Re, Im) rows for kernel dumps.
struct KernelRow {
  long j;
  int k;
  double re;
  double im;
};
void write_kernel_csv(std::ostream& os, const std::vector<KernelRow>& rows);

}  // namespace fracquad
