#pragma once

// Test problems, reference solutions, EOC computation and convergence reports.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracquad/baselines.hpp"
#include "fracquad/quadrature.hpp"
#include "fracquad/solvers.hpp"

namespace fracquad {

enum class ProblemKind { t1, t2, pde };

std::string to_string(ProblemKind k);
ProblemKind parse_problem_kind(std::string_view name);

/// T1: f = (t - t0)^{p - a} / Gamma(p + 1 - a).
/// T2: f = sin(t - t0) + 3 cos(t - t0).
/// PDE: method-of-lines system of size M with forcing t^p / Gamma(p+1) sin(pi x).
/// Scalar problems use y(t0) = y0 and, for a > 1, y'(t0) = 0.
struct TestProblem {
  ProblemKind kind = ProblemKind::t1;
  double alpha = 0.5;
  double lambda = 3.0;
  double p = 2.0;
  int M = 8;
  double y0 = 1.0;
  double t0 = 0.0;
  double T = 1.0;

  static TestProblem t1(double alpha, double p, double lambda = 3.0);
  static TestProblem t2(double alpha, double lambda = 3.0);
  static TestProblem pde(double alpha, double p, int M);

  /// Throws ConfigError on invalid parameters (T1 needs p > ceil(a) - 1).
  void validate() const;
  bool is_matrix() const { return kind == ProblemKind::pde; }
  std::string id() const;

  LinearFDEProblem<double> scalar_problem() const;
  LinearFDEProblem<Matrix> matrix_problem() const;
};

/// Closed-form T1 solution y(t) = E_{a,1}(-t^a lam) y0 + t^p E_{a,p+1}(-t^a lam).
double exact_t1(double t, double alpha, double lam, double p, double y0);

/// Semidiscrete MOL solution sin(pi x_j) (e_{a,1}(t; mu) + e_{a,p+a+1}(t; mu)),
/// mu = (2 - 2 cos(pi dx)) / dx^2.
Vector exact_pde_semidiscrete(double t, double alpha, double p, int M);

/// Smallest eigenvalue of the MOL matrix.
double mol_mu(int M);

inline NodeSet reference_nodes() { return NodeSet::preset("opt4"); }
inline constexpr double kReferenceStep = 1.0 / 4096.0;

template <Coefficient C>
Trajectory<state_t<C>> reference_fine_grid(const LinearFDEProblem<C>& problem,
                                           const NodeSet& nodes = reference_nodes(),
                                           double h_ref = kReferenceStep) {
  if (!(h_ref <= 1.0 / 1024.0)) throw ConfigError("reference_fine_grid: h_ref must be <= 1/1024");
  return solve_exponential_cq<C>(problem, nodes, h_ref);
}

enum class MethodKind { exponential_cq, pece, pi_trapezoidal };

struct MethodSpec {
  MethodKind kind = MethodKind::exponential_cq;
  NodeSet nodes = NodeSet::preset("opt1");
  int kernel_degree = kDefaultRationalDegree;

  static MethodSpec cq(NodeSet nodes, int degree = kDefaultRationalDegree);
  static MethodSpec baseline(BaselineMethod m);
  /// "cq", "pece", "pi-trapezoidal"; nodes apply to "cq".
  static MethodSpec parse(std::string_view method, const NodeSet& nodes,
                          int degree = kDefaultRationalDegree);
  std::string label() const;
};

struct ConvergenceRow {
  double h = 0.0;
  double error = 0.0;
  std::optional<double> eoc;
  double cpu_seconds = 0.0;
  bool unstable = false;

  bool operator==(const ConvergenceRow&) const = default;
};

struct ConvergenceReport {
  std::string problem;
  std::string method;
  std::string reference;
  std::vector<ConvergenceRow> rows;

  bool operator==(const ConvergenceReport&) const = default;

  const ConvergenceRow& finest() const { return rows.back(); }
};

/// log2(e_coarse / e_fine).
double eoc(double e_coarse, double e_fine);

/// Fills rows[i].eoc from consecutive errors; rows adjacent to an unstable row get none.
void assign_eoc(std::vector<ConvergenceRow>& rows);

/// Runs the method for each h (strictly halving), measuring the terminal error
/// against the problem's reference (absolute value or max norm) and the median
/// wall time over `repeats` runs. Rows with non-finite or > 1 errors are flagged unstable.
ConvergenceReport run_convergence(const TestProblem& problem, const MethodSpec& method,
                                  const std::vector<double>& h_list, int repeats = 1);

/// h = 2^-k for k = first..last.
std::vector<double> halving_steps(int first, int last);

/// CSV with header h,error,eoc,cpu_seconds; 16 significant digits; "*" in the
/// eoc column for unstable rows, empty for rows without an EOC.
void write_csv(std::ostream& os, const ConvergenceReport& report);
std::string to_json(const ConvergenceReport& report, int indent = 2);
ConvergenceReport report_from_json(std::string_view text);

}  // namespace fracquad
