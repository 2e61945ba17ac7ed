#include "fracquad/solvers.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "fracquad/kernels.hpp"
#include "fracquad/specfun.hpp"

namespace fracquad {

namespace {

template <Coefficient C>
state_t<C> apply(const typename coeff_traits<C>::weight_type& b, const state_t<C>& f) {
  return b * f;
}

}  // namespace

long step_count(double t0, double T, double h) {
  if (!(h > 0.0)) throw ConfigError("step size must be positive");
  const double ratio = (T - t0) / h;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-12 * std::max(1.0, n)) {
    throw ConfigError("(T - t0) / h must be a positive integer");
  }
  if (n > static_cast<double>(kMaxSteps)) throw ConfigError("too many steps");
  return static_cast<long>(n);
}

template <Coefficient C>
Trajectory<state_t<C>> solve_exponential_cq(const LinearFDEProblem<C>& problem,
                                            const WeightTable<C>& table) {
  using State = state_t<C>;
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  problem.validate();
  const double h = table.h;
  const long n = step_count(problem.t0, problem.T, h);
  if (table.lags() < n) throw DomainError("solve_exponential_cq: weight table too short");
  const NodeSet& nodes = table.nodes;
  const int nu = nodes.nu();

  // Forcing values F[j][r] = f(t0 + (j + c_r) h), shared between coinciding node times.
  std::vector<std::vector<State>> forcing(n);
  std::unordered_map<double, std::pair<long, int>> seen;
  long evaluations = 0;
  for (long j = 0; j < n; ++j) {
    forcing[j].reserve(nu);
    for (int r = 0; r < nu; ++r) {
      const double t = problem.t0 + (static_cast<double>(j) + nodes[r]) * h;
      const auto it = seen.find(t);
      if (it != seen.end()) {
        forcing[j].push_back(forcing[it->second.first][it->second.second]);
      } else {
        forcing[j].push_back(problem.forcing(t));
        seen.emplace(t, std::make_pair(j, r));
        ++evaluations;
      }
    }
  }

  const MLKernel kernel(problem.alpha, default_rational_approx().degree == table.kernel_degree
                                           ? default_rational_approx()
                                           : build_rational_approx(table.kernel_degree));
  const C w = std::pow(h, problem.alpha) * problem.coeff;

  Trajectory<State> traj;
  traj.h = h;
  traj.times.resize(n + 1);
  traj.values.reserve(n + 1);
  for (long i = 0; i <= n; ++i) traj.times[i] = problem.t0 + static_cast<double>(i) * h;
  traj.values.push_back(problem.init[0]);

  for (long step = 1; step <= n; ++step) {
    const double dn = static_cast<double>(step);
    State y = apply<C>(kernel.eval(1.0, dn, w), problem.init[0]);
    double hk = 1.0;
    for (int k = 1; k < problem.m(); ++k) {
      hk *= h;
      y += hk * apply<C>(kernel.eval(k + 1.0, dn, w), problem.init[k]);
    }
    for (long j = 0; j < step; ++j) {
      const auto& b = table.at(step - j);
      for (int r = 0; r < nu; ++r) y += apply<C>(b[r], forcing[j][r]);
    }
    if (!all_finite(y)) {
      throw NonFiniteStateError("solve_exponential_cq: non-finite state", step);
    }
    traj.values.push_back(std::move(y));
  }

  traj.meta.method = "exponential-cq";
  traj.meta.nodes = nodes.nodes;
  traj.meta.nu = nu;
  traj.meta.kernel_degree = table.kernel_degree;
  traj.meta.forcing_evaluations = evaluations;
  traj.meta.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return traj;
}

template <Coefficient C>
Trajectory<state_t<C>> solve_exponential_cq(const LinearFDEProblem<C>& problem, const NodeSet& nodes,
                                            double h, const RationalApproximation& rat) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  problem.validate();
  nodes.validate();
  const long n = step_count(problem.t0, problem.T, h);
  const WeightTable<C> table = build_weight_table<C>(problem.alpha, problem.coeff, h, n, nodes, rat);
  auto traj = solve_exponential_cq<C>(problem, table);
  traj.meta.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return traj;
}

template Trajectory<double> solve_exponential_cq<double>(const LinearFDEProblem<double>&,
                                                         const WeightTable<double>&);
template Trajectory<Vector> solve_exponential_cq<Matrix>(const LinearFDEProblem<Matrix>&,
                                                         const WeightTable<Matrix>&);
template Trajectory<double> solve_exponential_cq<double>(const LinearFDEProblem<double>&,
                                                         const NodeSet&, double,
                                                         const RationalApproximation&);
template Trajectory<Vector> solve_exponential_cq<Matrix>(const LinearFDEProblem<Matrix>&,
                                                         const NodeSet&, double,
                                                         const RationalApproximation&);

Vector mol_grid(int M) {
  if (M < 2) throw DomainError("mol_grid: M must be >= 2");
  const double dx = 1.0 / (M + 1);
  Vector x(M);
  for (int j = 0; j < M; ++j) x[j] = (j + 1) * dx;
  return x;
}

LinearFDEProblem<Matrix> mol_discretize(int M, double p, double alpha) {
  const Vector x = mol_grid(M);
  const double dx = 1.0 / (M + 1);
  const double scale = 1.0 / (dx * dx);
  Matrix a = Matrix::Zero(M, M);
  for (int j = 0; j < M; ++j) {
    a(j, j) = 2.0 * scale;
    if (j > 0) a(j, j - 1) = -scale;
    if (j + 1 < M) a(j, j + 1) = -scale;
  }
  const Vector shape = (std::numbers::pi * x.array()).sin().matrix();

  LinearFDEProblem<Matrix> problem;
  problem.alpha = alpha;
  problem.coeff = a;
  problem.t0 = 0.0;
  problem.T = 1.0;
  problem.init.push_back(shape);
  if (problem.m() > 1) problem.init.push_back(Vector::Zero(M));
  const double g = gamma(p + 1.0);
  problem.forcing = [shape, p, g](double t) -> Vector { return (std::pow(t, p) / g) * shape; };
  return problem;
}

}  // namespace fracquad
