#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace dissipa {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Symmetric part (M + M^T)/2.
template <typename Derived>
auto sym_part(const Eigen::MatrixBase<Derived>& m) {
  return ((m + m.transpose()) * 0.5).eval();
}

/// Hermitian part (M + M*)/2.
template <typename Derived>
auto herm_part(const Eigen::MatrixBase<Derived>& m) {
  return ((m + m.adjoint()) * 0.5).eval();
}

/// Frobenius norm of M - M^T.
template <typename Derived>
double asymmetry(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.transpose()).norm();
}

/// Frobenius norm of M - M*.
template <typename Derived>
double non_hermiticity(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).norm();
}

}  // namespace dissipa
