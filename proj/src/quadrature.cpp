#include "fracquad/quadrature.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "fracquad/errors.hpp"

namespace fracquad {

namespace {

double parse_number(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw ConfigError("empty node entry");
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(s, &used);
      if (used != s.size()) throw ConfigError("bad node entry '" + s + "'");
      return v;
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    std::size_t used_den = 0;
    const double a = std::stod(num, &used);
    const double b = std::stod(den, &used_den);
    if (used != num.size() || used_den != den.size() || b == 0.0) {
      throw ConfigError("bad node entry '" + s + "'");
    }
    return a / b;
  } catch (const std::logic_error&) {
    throw ConfigError("bad node entry '" + s + "'");
  }
}

double op_norm1(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
}

double norm_of(double x) { return std::abs(x); }
double norm_of(const Matrix& m) { return op_norm1(m); }

}  // namespace

void NodeSet::validate() const {
  if (nodes.empty()) throw DomainError("NodeSet: at least one node required");
  if (nu() > kMaxNodes) throw DomainError("NodeSet: at most 8 nodes supported");
  for (double c : nodes) {
    if (!(c >= 0.0 && c <= 1.0)) throw DomainError("NodeSet: nodes must lie in [0, 1]");
  }
  for (int a = 0; a < nu(); ++a) {
    for (int b = a + 1; b < nu(); ++b) {
      if (!(std::abs(nodes[a] - nodes[b]) > kMinNodeGap)) {
        throw DomainError("NodeSet: nodes must be distinct");
      }
    }
  }
}

NodeSet NodeSet::preset(std::string_view name) {
  if (name == "opt1") return {0.5};
  if (name == "opt2") return {1.0 / 3.0, 1.0};
  if (name == "opt3") return {0.0, 0.5, 1.0};
  if (name == "opt4") return {0.0, 0.25, 0.7, 1.0};
  throw ConfigError("unknown node preset '" + std::string(name) + "'");
}

NodeSet NodeSet::parse(std::string_view text) {
  if (text.starts_with("opt")) return preset(text);
  NodeSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.nodes.push_back(parse_number(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    out.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return out;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os.precision(16);
  os << '{';
  for (int r = 0; r < nu(); ++r) os << (r ? "," : "") << nodes[r];
  os << '}';
  return os.str();
}

std::vector<double> node_polynomial(const NodeSet& nodes) {
  std::vector<double> coef{1.0};
  for (double c : nodes.nodes) {
    std::vector<double> next(coef.size() + 1, 0.0);
    for (std::size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] -= c * coef[i];
    }
    coef = std::move(next);
  }
  return coef;
}

double node_poly_integral(const NodeSet& nodes) {
  nodes.validate();
  const auto coef = node_polynomial(nodes);
  double acc = 0.0;
  for (std::size_t i = 0; i < coef.size(); ++i) acc += coef[i] / static_cast<double>(i + 1);
  return acc;
}

template struct WeightTable<double>;
template struct WeightTable<Matrix>;

template <Coefficient C>
double order_residual(const WeightTable<C>& table, long j) {
  using W = typename WeightTable<C>::weight_type;
  const auto& b = table.at(j);
  const auto& rhs = table.moments.at(j - 1);
  double worst = 0.0;
  for (int k = 0; k < table.nodes.nu(); ++k) {
    W acc = b[0] * std::pow(table.nodes[0], k);
    for (int r = 1; r < table.nodes.nu(); ++r) acc = acc + b[r] * std::pow(table.nodes[r], k);
    const double res = norm_of(W(acc - rhs[k])) / std::max(1.0, norm_of(rhs[k]));
    worst = std::max(worst, res);
  }
  return worst;
}

template double order_residual<double>(const WeightTable<double>&, long);
template double order_residual<Matrix>(const WeightTable<Matrix>&, long);

template <Coefficient C>
WeightTable<C> build_weight_table(double alpha, const C& coeff, double h, long n,
                                  const NodeSet& nodes, const RationalApproximation& rat,
                                  KernelRoute route) {
  using W = typename WeightTable<C>::weight_type;
  nodes.validate();
  if (n < 1) throw DomainError("build_weight_table: n must be >= 1");
  if (!(h > 0.0)) throw DomainError("build_weight_table: h must be positive");
  if constexpr (std::is_same_v<C, Matrix>) {
    if (coeff.rows() != coeff.cols()) throw DomainError("build_weight_table: coefficient must be square");
  }
  const MLKernel kernel(alpha, rat);
  const double ha = std::pow(h, alpha);
  const C w = ha * coeff;
  const int nu = nodes.nu();

  WeightTable<C> table;
  table.h = h;
  table.alpha = alpha;
  table.coeff = coeff;
  table.nodes = nodes;
  table.kernel_degree = rat.degree;
  table.weights.reserve(n);
  table.moments.reserve(n);
  for (long j = 1; j <= n; ++j) {
    std::vector<W> rhs = kernel.r_hat(j, w, nu, route);
    for (auto& v : rhs) v = ha * v;
    table.moments.push_back(rhs);
    table.weights.push_back(vandermonde_solve<W>(nodes.nodes, std::move(rhs)));
    const double res = order_residual(table, j);
    if (!(res <= kWeightResidualTol)) {
      std::ostringstream msg;
      msg << "build_weight_table: order-condition residual " << std::scientific << res
          << " at lag " << j;
      throw WeightAccuracyError(msg.str());
    }
  }
  return table;
}

template WeightTable<double> build_weight_table<double>(double, const double&, double, long,
                                                        const NodeSet&,
                                                        const RationalApproximation&, KernelRoute);
template WeightTable<Matrix> build_weight_table<Matrix>(double, const Matrix&, double, long,
                                                        const NodeSet&,
                                                        const RationalApproximation&, KernelRoute);

int degree_of_precision(const NodeSet& nodes, std::span<const double> weights, long j,
                        double alpha, double w, double h, const RationalApproximation& rat) {
  nodes.validate();
  if (static_cast<int>(weights.size()) != nodes.nu()) {
    throw DomainError("degree_of_precision: weight count does not match nodes");
  }
  constexpr int kMaxCheck = 2 * kMaxNodes + 1;
  const double ha = std::pow(h, alpha);
  const auto moments = MLKernel(alpha, rat).r_hat(j, w, kMaxCheck + 1);
  int d = -1;
  for (int k = 0; k <= kMaxCheck; ++k) {
    double acc = 0.0;
    for (int r = 0; r < nodes.nu(); ++r) acc += weights[r] * std::pow(nodes[r], k);
    const double ref = ha * moments[k];
    if (!(std::abs(acc - ref) <= kPrecisionTol * std::max(std::abs(ref), std::abs(acc)))) break;
    d = k;
  }
  return d;
}

void write_weights_csv(std::ostream& os, const WeightTable<double>& table) {
  const auto old = os.precision(16);
  os << "j,r,value\n";
  for (long j = 1; j <= table.lags(); ++j) {
    const auto& b = table.at(j);
    for (int r = 0; r < table.nodes.nu(); ++r) os << j << ',' << r + 1 << ',' << b[r] << '\n';
  }
  os.precision(old);
}

void write_weights_csv(std::ostream& os, const WeightTable<Matrix>& table) {
  const auto old = os.precision(16);
  os << "j,r,row,col,value\n";
  for (long j = 1; j <= table.lags(); ++j) {
    const auto& b = table.at(j);
    for (int r = 0; r < table.nodes.nu(); ++r) {
      for (Eigen::Index i = 0; i < b[r].rows(); ++i) {
        for (Eigen::Index c = 0; c < b[r].cols(); ++c) {
          os << j << ',' << r + 1 << ',' << i << ',' << c << ',' << b[r](i, c) << '\n';
        }
      }
    }
  }
  os.precision(old);
}

}  // namespace fracquad
