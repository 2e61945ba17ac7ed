#pragma once

#include <span>
#include <vector>

#include "fracquad/errors.hpp"
#include "fracquad/types.hpp"

namespace fracquad {

inline constexpr int kMinRationalDegree = 2;
inline constexpr int kMaxRationalDegree = 16;
inline constexpr int kDefaultRationalDegree = 15;

/// Type (N-1, N) rational approximation r(x) = sum_k res_k / (x - pole_k) of
/// exp(x) on (-inf, 0]. Poles and residues come in conjugate pairs; for odd N
/// exactly one pole is real. Immutable once built.
struct RationalApproximation {
  int degree = 0;
  std::vector<cplx> poles;
  std::vector<cplx> residues;

  /// Indices of the poles with Im >= 0 and their multiplicity in a
  /// real-argument sum (1 for the real pole, 2 for a conjugate pair).
  std::vector<int> upper;
  std::vector<double> upper_weight;

  cplx operator()(cplx x) const;
  double operator()(double x) const;
};

/// Carathéodory-Fejér approximation of degree N (table-driven), 2 <= N <= 16.
RationalApproximation build_rational_approx(int degree);

/// The N = 15 approximation, built once.
const RationalApproximation& default_rational_approx();

/// max |exp(x) - r(x)| over the given abscissae.
double sup_error(const RationalApproximation& rat, std::span<const double> xs);

/// 0 together with -logspace(log10(lo), log10(hi), n).
std::vector<double> negative_log_grid(double lo, double hi, int n);

}  // namespace fracquad
