#pragma once

#include <map>
#include <string>

#include "dissipa/multi_index.hpp"
#include "dissipa/types.hpp"

namespace dissipa {

/// Constant-coefficient evolution system
///
///   A0 U_t + sum_{0 <= |alpha| <= m} L^alpha D^alpha U = 0,
///
/// stored as a sparse map over multi-indices; absent indices are zero.
/// The mass matrix A0 is symmetric positive definite (identity by default).
/// Immutable after construction and safe to share across threads.
class CoefficientSystem {
 public:
  CoefficientSystem(int n, int d, std::map<MultiIndex, Matrix> coeffs, Matrix mass);
  CoefficientSystem(int n, int d, std::map<MultiIndex, Matrix> coeffs);

  int state_dim() const { return n_; }
  int space_dim() const { return d_; }
  int max_order() const { return m_; }
  const Matrix& mass() const { return mass_; }
  bool mass_is_identity() const { return mass_identity_; }
  const std::map<MultiIndex, Matrix>& coeffs() const { return coeffs_; }

  /// Nullptr when alpha is absent (i.e. the coefficient is zero).
  const Matrix* coeff(const MultiIndex& alpha) const;

  /// True when a nonzero |alpha| = 0 block is present.
  bool has_relaxation() const { return has_relaxation_; }

  /// Plain-text document; see README for the grammar. Values use
  /// shortest round-trip decimals, so write/read is bit-identical.
  std::string to_document() const;
  static CoefficientSystem from_document(const std::string& text);

 private:
  int n_ = 0, d_ = 0, m_ = 0;
  Matrix mass_;
  bool mass_identity_ = false;
  bool has_relaxation_ = false;
  std::map<MultiIndex, Matrix> coeffs_;
};

}  // namespace dissipa
