#pragma once

#include <compare>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dissipa {

/// Multi-index in Z_{>=0}^d. Ordered, so it can key a std::map.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  /// alpha = power * e_axis.
  static MultiIndex unit(int d, int axis, int power = 1);
  /// alpha = 0 in d variables.
  static MultiIndex zero(int d);

  int dim() const { return static_cast<int>(entries_.size()); }
  int order() const;
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  std::string str() const;  // "(2,0,1)"

 private:
  std::vector<int> entries_;
};

/// omega^alpha for a real d-vector.
double monomial(const Eigen::VectorXd& omega, const MultiIndex& alpha);

/// (i*xi)^alpha for a real d-vector xi.
std::complex<double> i_monomial(const Eigen::VectorXd& xi, const MultiIndex& alpha);

}  // namespace dissipa
