#include "fracquad/specfun.hpp"

#include <cmath>

#include "fracquad/kernels.hpp"

namespace fracquad {

void MLArgs::validate() const {
  if (!(alpha > 0.0)) throw DomainError("MLArgs: alpha must be positive");
  if (!(beta > 0.0)) throw DomainError("MLArgs: beta must be positive");
  if (!(t >= 0.0)) throw DomainError("MLArgs: t must be non-negative");
  if (t == 0.0 && beta < 1.0) throw DomainError("MLArgs: e_{a,b}(0) diverges for b < 1");
}

double gamma(double x) {
  if (x <= 0.0 && std::floor(x) == x) throw DomainError("gamma: pole at non-positive integer");
  return std::tgamma(x);
}

double gml(double alpha, double beta, double t, double lam) {
  MLArgs{alpha, beta, t, lam}.validate();
  if (t == 0.0) return beta == 1.0 ? 1.0 : 0.0;
  const double x = std::pow(t, alpha) * lam;
  if (std::abs(x) <= kSeriesRouteThreshold) {
    return std::pow(t, beta - 1.0) * ml_series<double>(alpha, beta, -x, 1e-16);
  }
  return MLKernel(alpha).eval(beta, t, lam);
}

cplx gml(double alpha, double beta, double t, cplx lam) {
  MLArgs{alpha, beta, t, lam}.validate();
  if (t == 0.0) return beta == 1.0 ? 1.0 : 0.0;
  const cplx x = std::pow(t, alpha) * lam;
  if (std::abs(x) <= kSeriesRouteThreshold) {
    return std::pow(t, beta - 1.0) * ml_series<double>(alpha, beta, -x, 1e-16);
  }
  return MLKernel(alpha).eval(beta, t, lam);
}

}  // namespace fracquad
