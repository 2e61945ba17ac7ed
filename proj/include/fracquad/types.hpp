#pragma once

#include <complex>
#include <type_traits>

#include <Eigen/Dense>

namespace fracquad {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

/// Coefficient of a linear FDE: a scalar lambda or a square matrix A.
template <typename T>
concept Coefficient = std::is_same_v<T, double> || std::is_same_v<T, Matrix>;

template <Coefficient C>
struct coeff_traits;

template <>
struct coeff_traits<double> {
  using state_type = double;
  using weight_type = double;
  static double identity(const double&) { return 1.0; }
  static double zero_state(const double&) { return 0.0; }
  static int dim(const double&) { return 1; }
};

template <>
struct coeff_traits<Matrix> {
  using state_type = Vector;
  using weight_type = Matrix;
  static Matrix identity(const Matrix& a) { return Matrix::Identity(a.rows(), a.cols()); }
  static Vector zero_state(const Matrix& a) { return Vector::Zero(a.rows()); }
  static int dim(const Matrix& a) { return static_cast<int>(a.rows()); }
};

template <Coefficient C>
using state_t = typename coeff_traits<C>::state_type;

/// Max-norm of a scalar or vector quantity.
inline double max_abs(double x) { return std::abs(x); }
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

inline bool all_finite(double x) { return std::isfinite(x); }
template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite();
}

}  // namespace fracquad
