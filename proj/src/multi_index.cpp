#include "dissipa/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace dissipa {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MultiIndex: empty entry list");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::unit(int d, int axis, int power) {
  if (axis < 0 || axis >= d) throw std::invalid_argument("MultiIndex::unit: axis out of range");
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  e[static_cast<std::size_t>(axis)] = power;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::zero(int d) {
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(d), 0));
}

int MultiIndex::order() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

double monomial(const Eigen::VectorXd& omega, const MultiIndex& alpha) {
  double p = 1.0;
  for (int i = 0; i < alpha.dim(); ++i)
    for (int k = 0; k < alpha[i]; ++k) p *= omega[i];
  return p;
}

std::complex<double> i_monomial(const Eigen::VectorXd& xi, const MultiIndex& alpha) {
  std::complex<double> p(1.0, 0.0);
  const std::complex<double> i(0.0, 1.0);
  for (int k = 0; k < alpha.dim(); ++k)
    for (int j = 0; j < alpha[k]; ++j) p *= i * xi[k];
  return p;
}

}  // namespace dissipa
