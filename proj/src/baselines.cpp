#include "fracquad/baselines.hpp"

#include <chrono>
#include <limits>
#include <cmath>
#include <vector>

#include "fracquad/specfun.hpp"

namespace fracquad {

namespace {

using Clock = std::chrono::steady_clock;

template <Coefficient C>
state_t<C> taylor_part(const LinearFDEProblem<C>& problem, double t) {
  state_t<C> y = problem.init[0];
  double factor = 1.0;
  for (int k = 1; k < problem.m(); ++k) {
    factor *= (t - problem.t0) / k;
    y += factor * problem.init[k];
  }
  return y;
}

template <Coefficient C>
state_t<C> field(const LinearFDEProblem<C>& problem, double t, const state_t<C>& y) {
  return problem.forcing(t) - problem.coeff * y;
}

/// Corrector history sum_{j=0}^{n} a_{j,n+1} F_j (without the F_{n+1} term).
template <typename State>
State corrector_history(const std::vector<State>& f, const std::vector<double>& c, long n,
                        double alpha) {
  const double dn = static_cast<double>(n);
  State acc = (std::pow(dn, alpha + 1.0) - (dn - alpha) * std::pow(dn + 1.0, alpha)) * f[0];
  for (long j = 1; j <= n; ++j) acc += c[n - j] * f[j];
  return acc;
}

template <typename State>
Trajectory<State> start_trajectory(double t0, double h, long n, const State& y0) {
  Trajectory<State> traj;
  traj.h = h;
  traj.times.resize(n + 1);
  for (long i = 0; i <= n; ++i) traj.times[i] = t0 + static_cast<double>(i) * h;
  traj.values.reserve(n + 1);
  traj.values.push_back(y0);
  return traj;
}

std::vector<double> corrector_coefficients(long n, double alpha) {
  std::vector<double> c(n + 1);
  const double e = alpha + 1.0;
  for (long d = 0; d <= n; ++d) {
    const double x = static_cast<double>(d);
    c[d] = std::pow(x + 2.0, e) + std::pow(x, e) - 2.0 * std::pow(x + 1.0, e);
  }
  return c;
}

}  // namespace

std::string to_string(BaselineMethod m) {
  return m == BaselineMethod::pece ? "pece" : "pi-trapezoidal";
}

BaselineMethod parse_baseline(std::string_view name) {
  if (name == "pece") return BaselineMethod::pece;
  if (name == "pi-trapezoidal" || name == "pi_trapezoidal" || name == "pi") {
    return BaselineMethod::pi_trapezoidal;
  }
  throw ConfigError("unknown baseline method '" + std::string(name) + "'");
}

template <Coefficient C>
Trajectory<state_t<C>> solve_pece(const LinearFDEProblem<C>& problem, double h) {
  using State = state_t<C>;
  const auto start = Clock::now();
  problem.validate();
  const long n = step_count(problem.t0, problem.T, h);
  const double alpha = problem.alpha;
  const double ha = std::pow(h, alpha);
  const double gp = ha / gamma(alpha + 1.0);
  const double gc = ha / gamma(alpha + 2.0);

  std::vector<double> b(n);
  for (long d = 0; d < n; ++d) {
    const double x = static_cast<double>(d);
    b[d] = std::pow(x + 1.0, alpha) - std::pow(x, alpha);
  }
  const std::vector<double> c = corrector_coefficients(n, alpha);

  auto traj = start_trajectory<State>(problem.t0, h, n, problem.init[0]);
  std::vector<State> f;
  f.reserve(n + 1);
  f.push_back(field(problem, problem.t0, problem.init[0]));
  for (long step = 0; step < n; ++step) {
    const double t = traj.times[step + 1];
    const State base = taylor_part(problem, t);
    State pred_sum = b[step] * f[0];
    for (long j = 1; j <= step; ++j) pred_sum += b[step - j] * f[j];
    const State pred = base + gp * pred_sum;
    State y = base + gc * (corrector_history(f, c, step, alpha) + field(problem, t, pred));
    if (!all_finite(y)) {
      traj.meta.stable = false;
      traj.meta.first_nonfinite_step = step + 1;
      while (static_cast<long>(traj.values.size()) <= n) traj.values.push_back(y);
      break;
    }
    f.push_back(field(problem, t, y));
    traj.values.push_back(std::move(y));
  }
  traj.meta.method = "pece";
  traj.meta.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return traj;
}

template <Coefficient C>
Trajectory<state_t<C>> solve_pi_trapezoidal(const LinearFDEProblem<C>& problem, double h) {
  using State = state_t<C>;
  const auto start = Clock::now();
  problem.validate();
  const long n = step_count(problem.t0, problem.T, h);
  const double alpha = problem.alpha;
  const double gc = std::pow(h, alpha) / gamma(alpha + 2.0);
  const std::vector<double> c = corrector_coefficients(n, alpha);

  const C system = coeff_traits<C>::identity(problem.coeff) + gc * problem.coeff;
  auto solve = [&]() {
    if constexpr (std::is_same_v<C, double>) {
      if (system == 0.0) throw SingularError("solve_pi_trapezoidal: singular implicit step");
      return [s = system](double rhs) { return rhs / s; };
    } else {
      Eigen::PartialPivLU<Matrix> lu(system);
      if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
        throw SingularError("solve_pi_trapezoidal: singular implicit step");
      }
      return [lu](const Vector& rhs) -> Vector { return lu.solve(rhs); };
    }
  }();

  auto traj = start_trajectory<State>(problem.t0, h, n, problem.init[0]);
  std::vector<State> f;
  f.reserve(n + 1);
  f.push_back(field(problem, problem.t0, problem.init[0]));
  for (long step = 0; step < n; ++step) {
    const double t = traj.times[step + 1];
    const State rhs = taylor_part(problem, t) +
                      gc * (corrector_history(f, c, step, alpha) + problem.forcing(t));
    State y = solve(rhs);
    if (!all_finite(y)) {
      traj.meta.stable = false;
      traj.meta.first_nonfinite_step = step + 1;
      while (static_cast<long>(traj.values.size()) <= n) traj.values.push_back(y);
      break;
    }
    f.push_back(field(problem, t, y));
    traj.values.push_back(std::move(y));
  }
  traj.meta.method = "pi-trapezoidal";
  traj.meta.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return traj;
}

template Trajectory<double> solve_pece<double>(const LinearFDEProblem<double>&, double);
template Trajectory<Vector> solve_pece<Matrix>(const LinearFDEProblem<Matrix>&, double);
template Trajectory<double> solve_pi_trapezoidal<double>(const LinearFDEProblem<double>&, double);
template Trajectory<Vector> solve_pi_trapezoidal<Matrix>(const LinearFDEProblem<Matrix>&, double);

}  // namespace fracquad
