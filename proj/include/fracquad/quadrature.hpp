#pragma once

// Quadrature nodes, the node-polynomial integral P_K, Vandermonde solves and the
// lag-indexed weight tables b_r(j) / B_r(j) defined by the order conditions
//
//   sum_r b_r(j) c_r^k = h^a Rhat_{a,k}(j; h^a lambda),   k = 0..nu-1.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracquad/kernels.hpp"
#include "fracquad/rational_approx.hpp"
#include "fracquad/types.hpp"

namespace fracquad {

inline constexpr int kMaxNodes = 8;
inline constexpr double kMinNodeGap = 1e-10;
inline constexpr double kWeightResidualTol = 1e-10;
inline constexpr double kPrecisionTol = 1e-9;

struct NodeSet {
  std::vector<double> nodes;

  NodeSet() = default;
  NodeSet(std::initializer_list<double> c) : nodes(c) {}
  explicit NodeSet(std::vector<double> c) : nodes(std::move(c)) {}

  int nu() const { return static_cast<int>(nodes.size()); }
  double operator[](int r) const { return nodes[r]; }

  /// Throws DomainError unless 1 <= nu <= 8, every node lies in [0, 1] and
  /// the nodes are pairwise separated by more than 1e-10.
  void validate() const;

  /// opt1 = {1/2}, opt2 = {1/3, 1}, opt3 = {0, 1/2, 1}, opt4 = {0, 1/4, 7/10, 1}.
  static NodeSet preset(std::string_view name);

  /// Preset name or comma separated list; entries may be decimals or fractions "p/q".
  static NodeSet parse(std::string_view text);

  std::string to_string() const;
};

/// Monomial coefficients (ascending powers) of pi(u) = prod_r (u - c_r).
std::vector<double> node_polynomial(const NodeSet& nodes);

/// P_K = int_0^1 pi(u) du.
double node_poly_integral(const NodeSet& nodes);

/// Solves sum_r c_r^k x_r = rhs_k (k = 0..n-1) in place, Bjorck-Pereyra.
/// T is double or a matrix type (one right-hand side per entry).
template <typename T>
void vandermonde_solve_inplace(std::span<const double> c, std::span<T> rhs) {
  const std::size_t n = c.size();
  if (rhs.size() != n) throw DomainError("vandermonde_solve: size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (c[a] == c[b]) throw DomainError("vandermonde_solve: duplicate nodes");
    }
  }
  if (n < 2) return;
  const std::size_t last = n - 1;
  for (std::size_t k = 0; k < last; ++k) {
    for (std::size_t i = last; i > k; --i) rhs[i] = rhs[i] - c[k] * rhs[i - 1];
  }
  for (std::size_t kk = last; kk-- > 0;) {
    for (std::size_t i = kk + 1; i <= last; ++i) rhs[i] = rhs[i] / (c[i] - c[i - kk - 1]);
    for (std::size_t i = kk; i < last; ++i) rhs[i] = rhs[i] - rhs[i + 1];
  }
}

template <typename T>
std::vector<T> vandermonde_solve(std::span<const double> c, std::vector<T> rhs) {
  vandermonde_solve_inplace<T>(c, rhs);
  return rhs;
}

inline std::vector<double> vandermonde_solve(const NodeSet& nodes, std::vector<double> rhs) {
  return vandermonde_solve<double>(nodes.nodes, std::move(rhs));
}

/// Quadrature weights for lags j = 1..n. weights[j-1][r] is b_r(j) (or B_r(j));
/// moments[j-1][k] is the order-condition right-hand side h^a Rhat_{a,k}(j; h^a coeff).
template <Coefficient C>
struct WeightTable {
  using weight_type = typename coeff_traits<C>::weight_type;

  double h = 0.0;
  double alpha = 0.0;
  C coeff{};
  NodeSet nodes;
  int kernel_degree = 0;
  std::vector<std::vector<weight_type>> weights;
  std::vector<std::vector<weight_type>> moments;

  long lags() const { return static_cast<long>(weights.size()); }
  const std::vector<weight_type>& at(long j) const { return weights.at(j - 1); }
};

/// Largest order-condition residual of lag j relative to max(1, |rhs|)
/// (operator 1-norm for matrices).
template <Coefficient C>
double order_residual(const WeightTable<C>& table, long j);

/// Builds b_r(j) for j = 1..n. Throws WeightAccuracyError when an order-condition
/// residual exceeds 1e-10 * max(1, |rhs|).
template <Coefficient C>
WeightTable<C> build_weight_table(double alpha, const C& coeff, double h, long n,
                                  const NodeSet& nodes,
                                  const RationalApproximation& rat = default_rational_approx(),
                                  KernelRoute route = KernelRoute::automatic);

extern template struct WeightTable<double>;
extern template struct WeightTable<Matrix>;

/// Largest d such that sum_r b_r c_r^k matches h^a Rhat_{a,k}(j; w) to
/// relative 1e-9 for every k <= d; -1 if even k = 0 fails. w is h^a lambda.
int degree_of_precision(const NodeSet& nodes, std::span<const double> weights, long j,
                        double alpha, double w, double h,
                        const RationalApproximation& rat = default_rational_approx());

/// CSV rows "j,r,value" (scalar) or "j,r,row,col,value" (matrix).
void write_weights_csv(std::ostream& os, const WeightTable<double>& table);
void write_weights_csv(std::ostream& os, const WeightTable<Matrix>& table);

}  // namespace fracquad
