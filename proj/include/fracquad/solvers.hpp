#pragma once

// Linear FDE data model, exponential convolution-quadrature stepper and the
// method-of-lines discretization of the time-fractional heat equation.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fracquad/errors.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/rational_approx.hpp"
#include "fracquad/types.hpp"

namespace fracquad {

/// D^a y + coeff y = f(t), t0 < t <= T, y^(k)(t0) = init[k] for k < ceil(a).
template <Coefficient C>
struct LinearFDEProblem {
  using state_type = state_t<C>;

  double alpha = 1.0;
  C coeff{};
  double t0 = 0.0;
  double T = 1.0;
  std::vector<state_type> init;
  std::function<state_type(double)> forcing;

  int m() const { return static_cast<int>(std::ceil(alpha)); }
  int dim() const { return coeff_traits<C>::dim(coeff); }

  void validate() const {
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("LinearFDEProblem: alpha must lie in (0, 2)");
    if (!(t0 < T)) throw DomainError("LinearFDEProblem: t0 < T required");
    if (static_cast<int>(init.size()) != m()) {
      throw DomainError("LinearFDEProblem: expected ceil(alpha) initial values");
    }
    if (!forcing) throw DomainError("LinearFDEProblem: forcing function missing");
    if constexpr (std::is_same_v<C, Matrix>) {
      if (coeff.rows() != coeff.cols()) throw DomainError("LinearFDEProblem: coefficient must be square");
      for (const auto& v : init) {
        if (v.size() != coeff.rows()) throw DomainError("LinearFDEProblem: initial value size mismatch");
      }
    }
  }
};

struct TrajectoryMeta {
  std::string method;
  std::vector<double> nodes;
  int nu = 0;
  int kernel_degree = 0;
  double wall_seconds = 0.0;
  long forcing_evaluations = 0;
  bool stable = true;
  long first_nonfinite_step = -1;
};

template <typename State>
struct Trajectory {
  double h = 0.0;
  std::vector<double> times;
  std::vector<State> values;
  TrajectoryMeta meta;

  long steps() const { return static_cast<long>(values.size()) - 1; }
  const State& terminal() const { return values.back(); }
};

inline constexpr long kMaxSteps = 10'000'000;

/// Number of steps (T - t0) / h; throws ConfigError unless it is an integer
/// (to 1e-12) in [1, kMaxSteps].
long step_count(double t0, double T, double h);

/// Exponential convolution quadrature
///   y_n = sum_{k<m} h^k e_{a,k+1}(n; h^a coeff) y_{0,k}
///       + sum_{j<n} sum_r b_r(n-j) f(t0 + (j + c_r) h).
/// Throws NonFiniteStateError on NaN/Inf.
template <Coefficient C>
Trajectory<state_t<C>> solve_exponential_cq(const LinearFDEProblem<C>& problem, const NodeSet& nodes,
                                            double h,
                                            const RationalApproximation& rat = default_rational_approx());

/// Same, reusing a weight table built for this problem, h and nodes.
template <Coefficient C>
Trajectory<state_t<C>> solve_exponential_cq(const LinearFDEProblem<C>& problem,
                                            const WeightTable<C>& table);

/// A = tridiag(-1, 2, -1) / dx^2 with dx = 1/(M+1), U0 = sin(pi x_j),
/// F(t) = t^p / Gamma(p+1) sin(pi x_j); zero second initial value when a > 1.
LinearFDEProblem<Matrix> mol_discretize(int M, double p, double alpha);

/// Interior grid x_j = j / (M+1), j = 1..M.
Vector mol_grid(int M);

}  // namespace fracquad
