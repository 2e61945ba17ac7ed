#pragma once

// Reference product-integration solvers: the fractional Adams PECE scheme and the
// implicit product-integration trapezoidal rule.

#include <string>
#include <string_view>

#include "fracquad/solvers.hpp"

namespace fracquad {

enum class BaselineMethod { pece, pi_trapezoidal };

struct BaselineConfig {
  BaselineMethod method = BaselineMethod::pece;
  double h = 0.0;

  void validate() const {
    if (!(h > 0.0)) throw DomainError("BaselineConfig: h must be positive");
  }
};

std::string to_string(BaselineMethod m);
BaselineMethod parse_baseline(std::string_view name);

/// Product-rectangle predictor, product-trapezoidal corrector, one correction
/// per step, vector field f(t) - coeff * y. Non-finite states are recorded in
/// meta.stable / meta.first_nonfinite_step instead of raising.
template <Coefficient C>
Trajectory<state_t<C>> solve_pece(const LinearFDEProblem<C>& problem, double h);

/// Implicit product-integration trapezoidal rule; each step solves
/// (I + h^a / Gamma(a+2) coeff) y_{n+1} = known terms with a single reused factorization.
template <Coefficient C>
Trajectory<state_t<C>> solve_pi_trapezoidal(const LinearFDEProblem<C>& problem, double h);

template <Coefficient C>
Trajectory<state_t<C>> solve_baseline(const LinearFDEProblem<C>& problem, const BaselineConfig& cfg) {
  cfg.validate();
  return cfg.method == BaselineMethod::pece ? solve_pece(problem, cfg.h)
                                            : solve_pi_trapezoidal(problem, cfg.h);
}

}  // namespace fracquad
