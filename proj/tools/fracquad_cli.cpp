// fracquad command line driver.
//
//   fracquad solve        one trajectory, CSV of (t, y)
//   fracquad convergence  error/EOC table for one method
//   fracquad compare      several methods on the same problem
//   fracquad pde          method-of-lines experiment
//   fracquad weights-dump quadrature weights or moment kernels as CSV
//
// Exit codes: 0 success, 2 invalid configuration, 3 solver failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracquad/harness.hpp"
#include "fracquad/kernels.hpp"
#include "fracquad/quadrature.hpp"

namespace {

using namespace fracquad;

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct Options {
  double alpha = 0.5;
  double lambda = 3.0;
  std::optional<double> p;
  std::string nodes = "opt1";
  std::string h_list = "2:7";
  std::optional<double> h;
  int degree = kDefaultRationalDegree;
  std::string problem = "t1";
  std::string method = "cq";
  std::string out;
  std::string format = "csv";
  int repeats = 5;
  int M = 8;
  long lags = 0;
  bool kernels = false;
};

double parse_value(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw ConfigError("bad number '" + text + "'");
      return v;
    }
    std::size_t used_den = 0;
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double a = std::stod(num, &used);
    const double b = std::stod(den, &used_den);
    if (used != num.size() || used_den != den.size() || b == 0.0) {
      throw ConfigError("bad number '" + text + "'");
    }
    return a / b;
  } catch (const std::logic_error&) {
    throw ConfigError("bad number '" + text + "'");
  }
}

/// "k1:k2" for 2^-k1 .. 2^-k2, otherwise a comma list of decimals or fractions.
std::vector<double> parse_h_list(const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    try {
      const int a = std::stoi(text.substr(0, colon));
      const int b = std::stoi(text.substr(colon + 1));
      if (a > b || a < 0 || b > 30) throw ConfigError("bad h range '" + text + "'");
      return halving_steps(a, b);
    } catch (const std::logic_error&) {
      throw ConfigError("bad h range '" + text + "'");
    }
  }
  std::vector<double> hs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) hs.push_back(parse_value(item));
  if (hs.empty()) throw ConfigError("empty h list");
  return hs;
}

TestProblem make_problem(const Options& o) {
  const ProblemKind kind = parse_problem_kind(o.problem);
  TestProblem tp;
  switch (kind) {
    case ProblemKind::t1: tp = TestProblem::t1(o.alpha, o.p.value_or(2.0), o.lambda); break;
    case ProblemKind::t2: tp = TestProblem::t2(o.alpha, o.lambda); break;
    case ProblemKind::pde: tp = TestProblem::pde(o.alpha, o.p.value_or(3.0), o.M); break;
  }
  tp.validate();
  return tp;
}

/// Comma separated methods; "cq" uses --nodes, "cq:<preset>" or "cq:<c1;c2;...>" names its own nodes.
std::vector<MethodSpec> parse_methods(const Options& o) {
  std::vector<MethodSpec> out;
  std::stringstream ss(o.method);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(MethodSpec::parse(item, NodeSet::parse(o.nodes), o.degree));
      continue;
    }
    std::string nodes = item.substr(colon + 1);
    std::replace(nodes.begin(), nodes.end(), ';', ',');
    out.push_back(MethodSpec::parse(item.substr(0, colon), NodeSet::parse(nodes), o.degree));
  }
  if (out.empty()) throw ConfigError("no method given");
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw ConfigError("format must be csv or json");
}

void emit_reports(const Options& o, const std::vector<ConvergenceReport>& reports, bool merged) {
  Output out(o.out);
  std::ostream& os = out.stream();
  if (o.format == "json") {
    if (!merged) {
      os << to_json(reports.front()) << '\n';
      return;
    }
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::json::parse(to_json(r)));
    os << nlohmann::json{{"reports", arr}}.dump(2) << '\n';
    return;
  }
  if (!merged) {
    write_csv(os, reports.front());
    return;
  }
  os << "method,h,error,eoc,cpu_seconds\n";
  for (const auto& r : reports) {
    std::ostringstream block;
    write_csv(block, r);
    std::string line;
    std::istringstream in(block.str());
    std::getline(in, line);
    while (std::getline(in, line)) os << '"' << r.method << "\"," << line << '\n';
  }
}

int run_solve(const Options& o) {
  check_format(o);
  const TestProblem tp = make_problem(o);
  const auto methods = parse_methods(o);
  const double h = o.h ? *o.h : parse_h_list(o.h_list).back();
  Output out(o.out);
  std::ostream& os = out.stream();
  os.precision(16);
  auto write = [&](const auto& traj) {
    if (o.format == "json") {
      nlohmann::json j;
      j["problem"] = tp.id();
      j["method"] = methods.front().label();
      j["h"] = traj.h;
      j["t"] = traj.times;
      auto ys = nlohmann::json::array();
      for (const auto& y : traj.values) {
        if constexpr (std::is_same_v<std::decay_t<decltype(y)>, double>) {
          ys.push_back(y);
        } else {
          ys.push_back(std::vector<double>(y.data(), y.data() + y.size()));
        }
      }
      j["y"] = ys;
      j["stable"] = traj.meta.stable;
      os << j.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < traj.values.size(); ++i) {
      os << traj.times[i];
      const auto& y = traj.values[i];
      if constexpr (std::is_same_v<std::decay_t<decltype(y)>, double>) {
        os << ',' << y;
      } else {
        for (Eigen::Index k = 0; k < y.size(); ++k) os << ',' << y[k];
      }
      os << '\n';
    }
  };
  const MethodSpec& m = methods.front();
  if (tp.is_matrix()) {
    const auto prob = tp.matrix_problem();
    if (o.format == "csv") {
      os << 't';
      for (int k = 1; k <= tp.M; ++k) os << ",y" << k;
      os << '\n';
    }
    if (m.kind == MethodKind::exponential_cq) {
      write(solve_exponential_cq<Matrix>(prob, m.nodes, h, build_rational_approx(m.kernel_degree)));
    } else {
      write(m.kind == MethodKind::pece ? solve_pece<Matrix>(prob, h)
                                       : solve_pi_trapezoidal<Matrix>(prob, h));
    }
  } else {
    const auto prob = tp.scalar_problem();
    if (o.format == "csv") os << "t,y\n";
    if (m.kind == MethodKind::exponential_cq) {
      write(solve_exponential_cq<double>(prob, m.nodes, h, build_rational_approx(m.kernel_degree)));
    } else {
      write(m.kind == MethodKind::pece ? solve_pece<double>(prob, h)
                                       : solve_pi_trapezoidal<double>(prob, h));
    }
  }
  return 0;
}

int run_convergence_cmd(const Options& o, bool merged) {
  check_format(o);
  const TestProblem tp = make_problem(o);
  const auto methods = parse_methods(o);
  const auto hs = parse_h_list(o.h_list);
  if (o.repeats < 1) throw ConfigError("repeats must be >= 1");
  std::vector<ConvergenceReport> reports;
  for (const auto& m : methods) reports.push_back(run_convergence(tp, m, hs, o.repeats));
  emit_reports(o, reports, merged || methods.size() > 1);
  return 0;
}

int run_weights_dump(const Options& o) {
  const TestProblem tp = make_problem(o);
  const NodeSet nodes = NodeSet::parse(o.nodes);
  const double h = o.h ? *o.h : parse_h_list(o.h_list).back();
  const long n = o.lags > 0 ? o.lags : step_count(tp.t0, tp.T, h);
  if (o.degree < kMinRationalDegree || o.degree > kMaxRationalDegree) {
    throw ConfigError("kernel degree must lie in [2, 16]");
  }
  const auto rat = build_rational_approx(o.degree);
  Output out(o.out);
  std::ostream& os = out.stream();
  if (o.kernels) {
    if (tp.is_matrix()) throw ConfigError("kernel dumps are scalar only");
    const MLKernel kernel(tp.alpha, rat);
    const double w = std::pow(h, tp.alpha) * tp.lambda;
    std::vector<KernelRow> rows;
    for (long j = 1; j <= n; ++j) {
      const auto r = kernel.r_hat(j, w, nodes.nu());
      for (int k = 0; k < nodes.nu(); ++k) rows.push_back({j, k, r[k], 0.0});
    }
    write_kernel_csv(os, rows);
    return 0;
  }
  if (tp.is_matrix()) {
    const auto prob = tp.matrix_problem();
    write_weights_csv(os, build_weight_table<Matrix>(tp.alpha, prob.coeff, h, n, nodes, rat));
  } else {
    write_weights_csv(os, build_weight_table<double>(tp.alpha, tp.lambda, h, n, nodes, rat));
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.alpha, "fractional order in (0, 2)")->capture_default_str();
  cmd->add_option("--lambda", o.lambda, "scalar coefficient")->capture_default_str();
  cmd->add_option("--p", o.p, "forcing exponent (default 2 for t1, 3 for pde)");
  cmd->add_option("--nodes", o.nodes, "comma list of nodes or opt1|opt2|opt3|opt4")
      ->capture_default_str();
  cmd->add_option("--h-list", o.h_list, "comma list of step sizes, or k1:k2 for 2^-k1..2^-k2")
      ->capture_default_str();
  cmd->add_option("--degree-N", o.degree, "rational approximation degree")->capture_default_str();
  cmd->add_option("--problem", o.problem, "t1|t2|pde")->capture_default_str();
  cmd->add_option("--method", o.method, "cq|pece|pi-trapezoidal, comma separated; cq:<nodes>")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "csv|json")->capture_default_str();
  cmd->add_option("--repeats", o.repeats, "timing repeats per step size")->capture_default_str();
  cmd->add_option("--M", o.M, "interior grid points for the pde problem")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exponential quadrature for linear fractional differential equations"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve one problem and print (t, y)");
  add_common(solve, o);
  solve->add_option("--h", o.h, "step size (default: last entry of --h-list)");

  auto* conv = app.add_subcommand("convergence", "error and EOC table");
  add_common(conv, o);

  auto* compare = app.add_subcommand("compare", "several methods, merged report");
  add_common(compare, o);

  auto* pde = app.add_subcommand("pde", "method-of-lines experiment");
  add_common(pde, o);

  auto* dump = app.add_subcommand("weights-dump", "quadrature weights (j,r,value) as CSV");
  add_common(dump, o);
  dump->add_option("--h", o.h, "step size (default: last entry of --h-list)");
  dump->add_option("--lags", o.lags, "number of lags (default (T - t0) / h)");
  dump->add_flag("--kernels", o.kernels, "dump moment kernels (j,k,re,im) instead of weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*solve) return run_solve(o);
    if (*conv) return run_convergence_cmd(o, false);
    if (*compare) return run_convergence_cmd(o, true);
    if (*pde) {
      o.problem = "pde";
      return run_convergence_cmd(o, false);
    }
    if (*dump) return run_weights_dump(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fracquad::Error& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitConfig;
}
