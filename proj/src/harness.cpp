#include "fracquad/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fracquad/kernels.hpp"
#include "fracquad/specfun.hpp"

namespace fracquad {

namespace {

using json = nlohmann::json;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(16);
  os << x;
  return os.str();
}

json number_to_json(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw ConfigError("report: bad number '" + s + "'");
}

template <Coefficient C>
double terminal_error(const Trajectory<state_t<C>>& traj, const state_t<C>& ref) {
  if (!traj.meta.stable) return std::numeric_limits<double>::infinity();
  const double e = max_abs(state_t<C>(traj.terminal() - ref));
  return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
}

template <Coefficient C>
Trajectory<state_t<C>> run_method(const LinearFDEProblem<C>& problem, const MethodSpec& method,
                                  double h) {
  switch (method.kind) {
    case MethodKind::exponential_cq: {
      if (method.kernel_degree == kDefaultRationalDegree) {
        return solve_exponential_cq<C>(problem, method.nodes, h);
      }
      return solve_exponential_cq<C>(problem, method.nodes, h,
                                     build_rational_approx(method.kernel_degree));
    }
    case MethodKind::pece:
      return solve_pece<C>(problem, h);
    case MethodKind::pi_trapezoidal:
      return solve_pi_trapezoidal<C>(problem, h);
  }
  throw ConfigError("unknown method");
}

template <Coefficient C>
std::vector<ConvergenceRow> convergence_rows(const LinearFDEProblem<C>& problem,
                                             const state_t<C>& ref, const MethodSpec& method,
                                             const std::vector<double>& h_list, int repeats) {
  using Clock = std::chrono::steady_clock;
  std::vector<ConvergenceRow> rows;
  for (double h : h_list) {
    std::vector<double> times;
    ConvergenceRow row;
    row.h = h;
    for (int rep = 0; rep < repeats; ++rep) {
      const auto start = Clock::now();
      const auto traj = run_method<C>(problem, method, h);
      times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
      if (rep == 0) {
        row.error = terminal_error<C>(traj, ref);
        row.unstable = !traj.meta.stable || !(row.error <= 1.0);
      }
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    row.cpu_seconds = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    rows.push_back(row);
  }
  assign_eoc(rows);
  return rows;
}

}  // namespace

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::t1: return "t1";
    case ProblemKind::t2: return "t2";
    case ProblemKind::pde: return "pde";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "t1" || name == "T1") return ProblemKind::t1;
  if (name == "t2" || name == "T2") return ProblemKind::t2;
  if (name == "pde" || name == "PDE") return ProblemKind::pde;
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

TestProblem TestProblem::t1(double alpha, double p, double lambda) {
  TestProblem tp;
  tp.kind = ProblemKind::t1;
  tp.alpha = alpha;
  tp.p = p;
  tp.lambda = lambda;
  return tp;
}

TestProblem TestProblem::t2(double alpha, double lambda) {
  TestProblem tp;
  tp.kind = ProblemKind::t2;
  tp.alpha = alpha;
  tp.lambda = lambda;
  return tp;
}

TestProblem TestProblem::pde(double alpha, double p, int M) {
  TestProblem tp;
  tp.kind = ProblemKind::pde;
  tp.alpha = alpha;
  tp.p = p;
  tp.M = M;
  return tp;
}

void TestProblem::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0)) throw ConfigError("alpha must lie in (0, 2)");
  if (!(t0 < T)) throw ConfigError("t0 < T required");
  switch (kind) {
    case ProblemKind::t1:
      if (!(p > std::ceil(alpha) - 1.0)) throw ConfigError("T1 requires p > ceil(alpha) - 1");
      if (!(lambda >= 0.0)) throw ConfigError("lambda must be non-negative");
      break;
    case ProblemKind::t2:
      if (!(lambda >= 0.0)) throw ConfigError("lambda must be non-negative");
      break;
    case ProblemKind::pde:
      if (M < 2) throw ConfigError("PDE requires M >= 2");
      if (!(p >= 0.0)) throw ConfigError("PDE requires p >= 0");
      if (t0 != 0.0) throw ConfigError("PDE requires t0 = 0");
      break;
  }
}

std::string TestProblem::id() const {
  std::ostringstream os;
  os.precision(16);
  switch (kind) {
    case ProblemKind::t1:
      os << "T1(alpha=" << alpha << ",lambda=" << lambda << ",p=" << p << ")";
      break;
    case ProblemKind::t2:
      os << "T2(alpha=" << alpha << ",lambda=" << lambda << ")";
      break;
    case ProblemKind::pde:
      os << "PDE(alpha=" << alpha << ",p=" << p << ",M=" << M << ")";
      break;
  }
  return os.str();
}

LinearFDEProblem<double> TestProblem::scalar_problem() const {
  validate();
  if (is_matrix()) throw ConfigError("scalar_problem: PDE problems are matrix valued");
  LinearFDEProblem<double> prob;
  prob.alpha = alpha;
  prob.coeff = lambda;
  prob.t0 = t0;
  prob.T = T;
  prob.init.push_back(y0);
  if (prob.m() > 1) prob.init.push_back(0.0);
  const double s = t0;
  if (kind == ProblemKind::t1) {
    const double e = p - alpha;
    const double g = gamma(p + 1.0 - alpha);
    prob.forcing = [s, e, g](double t) { return std::pow(t - s, e) / g; };
  } else {
    prob.forcing = [s](double t) { return std::sin(t - s) + 3.0 * std::cos(t - s); };
  }
  return prob;
}

LinearFDEProblem<Matrix> TestProblem::matrix_problem() const {
  validate();
  if (!is_matrix()) throw ConfigError("matrix_problem: only PDE problems are matrix valued");
  auto prob = mol_discretize(M, p, alpha);
  prob.T = T;
  return prob;
}

double exact_t1(double t, double alpha, double lam, double p, double y0) {
  if (t == 0.0) return y0;
  const long double ta = std::pow(static_cast<long double>(t), static_cast<long double>(alpha));
  const long double z = -ta * lam;
  if (std::abs(z) <= kSeriesZmax) {
    const long double tol = 1e-19L;
    const long double a = alpha;
    const long double e1 = ml_series<long double>(a, 1.0L, z, tol);
    const long double e2 = ml_series<long double>(a, static_cast<long double>(p) + 1.0L, z, tol);
    return static_cast<double>(e1 * y0 + std::pow(static_cast<long double>(t), p) * e2);
  }
  const MLKernel kernel(alpha);
  return kernel.eval(1.0, t, lam) * y0 + kernel.eval(p + 1.0, t, lam);
}

double mol_mu(int M) {
  const double dx = 1.0 / (M + 1);
  return (2.0 - 2.0 * std::cos(std::numbers::pi * dx)) / (dx * dx);
}

Vector exact_pde_semidiscrete(double t, double alpha, double p, int M) {
  const Vector x = mol_grid(M);
  const Vector shape = (std::numbers::pi * x.array()).sin().matrix();
  if (t == 0.0) return shape;
  const double mu = mol_mu(M);
  const MLKernel kernel(alpha);
  return (kernel.eval(1.0, t, mu) + kernel.eval(p + alpha + 1.0, t, mu)) * shape;
}

MethodSpec MethodSpec::cq(NodeSet nodes, int degree) {
  nodes.validate();
  MethodSpec m;
  m.kind = MethodKind::exponential_cq;
  m.nodes = std::move(nodes);
  m.kernel_degree = degree;
  return m;
}

MethodSpec MethodSpec::baseline(BaselineMethod b) {
  MethodSpec m;
  m.kind = b == BaselineMethod::pece ? MethodKind::pece : MethodKind::pi_trapezoidal;
  return m;
}

MethodSpec MethodSpec::parse(std::string_view method, const NodeSet& nodes, int degree) {
  if (method == "cq" || method == "exponential-cq" || method == "exponential_cq") {
    if (degree < kMinRationalDegree || degree > kMaxRationalDegree) {
      throw ConfigError("kernel degree must lie in [2, 16]");
    }
    try {
      return cq(nodes, degree);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  return baseline(parse_baseline(method));
}

std::string MethodSpec::label() const {
  switch (kind) {
    case MethodKind::exponential_cq:
      return "exponential-cq nu=" + std::to_string(nodes.nu()) + " nodes=" + nodes.to_string() +
             " N=" + std::to_string(kernel_degree);
    case MethodKind::pece:
      return "pece";
    case MethodKind::pi_trapezoidal:
      return "pi-trapezoidal";
  }
  return "?";
}

double eoc(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

void assign_eoc(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].eoc.reset();
    if (i == 0) continue;
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    if (a.unstable || b.unstable) continue;
    if (!(a.error > 0.0) || !(b.error > 0.0)) continue;
    rows[i].eoc = eoc(a.error, b.error);
  }
}

std::vector<double> halving_steps(int first, int last) {
  std::vector<double> hs;
  for (int k = first; k <= last; ++k) hs.push_back(std::ldexp(1.0, -k));
  return hs;
}

ConvergenceReport run_convergence(const TestProblem& problem, const MethodSpec& method,
                                  const std::vector<double>& h_list, int repeats) {
  problem.validate();
  if (h_list.empty()) throw ConfigError("h list must not be empty");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  for (std::size_t i = 1; i < h_list.size(); ++i) {
    if (std::abs(h_list[i] - 0.5 * h_list[i - 1]) > 1e-12 * h_list[i - 1]) {
      throw ConfigError("h list must be strictly halving");
    }
  }
  for (double h : h_list) step_count(problem.t0, problem.T, h);

  ConvergenceReport report;
  report.problem = problem.id();
  report.method = method.label();
  switch (problem.kind) {
    case ProblemKind::t1: {
      const double ref = exact_t1(problem.T - problem.t0, problem.alpha, problem.lambda, problem.p,
                                  problem.y0);
      report.reference = "closed form (Mittag-Leffler series)";
      report.rows = convergence_rows<double>(problem.scalar_problem(), ref, method, h_list, repeats);
      break;
    }
    case ProblemKind::t2: {
      const auto prob = problem.scalar_problem();
      const double ref = reference_fine_grid<double>(prob).terminal();
      report.reference = "exponential-cq nu=4 nodes=" + reference_nodes().to_string() +
                         " h=1/4096";
      report.rows = convergence_rows<double>(prob, ref, method, h_list, repeats);
      break;
    }
    case ProblemKind::pde: {
      const Vector ref = exact_pde_semidiscrete(problem.T, problem.alpha, problem.p, problem.M);
      report.reference = "semidiscrete eigenfunction solution";
      report.rows =
          convergence_rows<Matrix>(problem.matrix_problem(), ref, method, h_list, repeats);
      break;
    }
  }
  return report;
}

void write_csv(std::ostream& os, const ConvergenceReport& report) {
  os << "h,error,eoc,cpu_seconds\n";
  for (const auto& r : report.rows) {
    os << fmt(r.h) << ',' << fmt(r.error) << ',';
    if (r.unstable) {
      os << '*';
    } else if (r.eoc) {
      os << fmt(*r.eoc);
    }
    os << ',' << fmt(r.cpu_seconds) << '\n';
  }
}

std::string to_json(const ConvergenceReport& report, int indent) {
  json j;
  j["problem"] = report.problem;
  j["method"] = report.method;
  j["reference"] = report.reference;
  j["rows"] = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["h"] = r.h;
    row["error"] = number_to_json(r.error);
    row["eoc"] = r.eoc ? json(*r.eoc) : json(nullptr);
    row["cpu_seconds"] = r.cpu_seconds;
    row["unstable"] = r.unstable;
    j["rows"].push_back(row);
  }
  return j.dump(indent);
}

ConvergenceReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ConvergenceReport report;
    report.problem = j.at("problem").get<std::string>();
    report.method = j.at("method").get<std::string>();
    report.reference = j.at("reference").get<std::string>();
    for (const auto& row : j.at("rows")) {
      ConvergenceRow r;
      r.h = row.at("h").get<double>();
      r.error = number_from_json(row.at("error"));
      if (!row.at("eoc").is_null()) r.eoc = row.at("eoc").get<double>();
      r.cpu_seconds = row.at("cpu_seconds").get<double>();
      r.unstable = row.at("unstable").get<bool>();
      report.rows.push_back(r);
    }
    return report;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

}  // namespace fracquad
