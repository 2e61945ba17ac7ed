#include "fracquad/rational_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracquad/detail/cf_table.hpp"
#include "fracquad/errors.hpp"

namespace fracquad {

cplx RationalApproximation::operator()(cplx x) const {
  long double re = 0.0L, im = 0.0L;
  for (int k = 0; k < degree; ++k) {
    const cplx term = residues[k] / (x - poles[k]);
    re += term.real();
    im += term.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double RationalApproximation::operator()(double x) const {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const int k = upper[i];
    acc += upper_weight[i] * (residues[k] / (x - poles[k])).real();
  }
  return static_cast<double>(acc);
}

RationalApproximation build_rational_approx(int degree) {
  if (degree < kMinRationalDegree || degree > kMaxRationalDegree) {
    throw DomainError("build_rational_approx: unsupported degree " + std::to_string(degree) +
                      " (expected 2..16)");
  }
  const auto table = detail::cf_table(degree);
  RationalApproximation rat;
  rat.degree = degree;
  rat.poles.reserve(degree);
  rat.residues.reserve(degree);
  for (const auto& e : table) {
    rat.poles.emplace_back(e.pole_re, e.pole_im);
    rat.residues.emplace_back(e.res_re, e.res_im);
  }
  // lower half-plane entries become exact conjugates of their upper mates
  for (int k = 0; k < degree; ++k) {
    if (rat.poles[k].imag() >= 0.0) continue;
    int mate = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int m = 0; m < degree; ++m) {
      if (rat.poles[m].imag() <= 0.0) continue;
      const double d = std::abs(rat.poles[m] - std::conj(rat.poles[k]));
      if (d < best) {
        best = d;
        mate = m;
      }
    }
    if (mate < 0) throw DomainError("build_rational_approx: unpaired pole");
    rat.poles[k] = std::conj(rat.poles[mate]);
    rat.residues[k] = std::conj(rat.residues[mate]);
  }
  for (int k = 0; k < degree; ++k) {
    if (rat.poles[k].imag() == 0.0) {
      rat.upper.push_back(k);
      rat.upper_weight.push_back(1.0);
    } else if (rat.poles[k].imag() > 0.0) {
      rat.upper.push_back(k);
      rat.upper_weight.push_back(2.0);
    }
  }
  return rat;
}

const RationalApproximation& default_rational_approx() {
  static const RationalApproximation rat = build_rational_approx(kDefaultRationalDegree);
  return rat;
}

double sup_error(const RationalApproximation& rat, std::span<const double> xs) {
  double err = 0.0;
  for (double x : xs) err = std::max(err, std::abs(std::exp(x) - rat(x)));
  return err;
}

std::vector<double> negative_log_grid(double lo, double hi, int n) {
  std::vector<double> xs;
  xs.reserve(n + 1);
  xs.push_back(0.0);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < n; ++i) {
    xs.push_back(-std::pow(10.0, a + (b - a) * i / (n - 1)));
  }
  return xs;
}

}  // namespace fracquad
