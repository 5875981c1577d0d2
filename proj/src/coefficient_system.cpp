#include "dissipa/coefficient_system.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>
#include <stdexcept>

#include "dissipa/numfmt.hpp"

namespace dissipa {

namespace {

void validate_mass(const Matrix& mass, int n) {
  if (mass.rows() != n || mass.cols() != n)
    throw std::invalid_argument("CoefficientSystem: mass must be n x n");
  if (asymmetry(mass) > 1e-10 * (1.0 + mass.norm()))
    throw std::domain_error("CoefficientSystem: mass matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym_part(mass), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error("CoefficientSystem: mass matrix not positive definite");
}

}  // namespace

CoefficientSystem::CoefficientSystem(int n, int d, std::map<MultiIndex, Matrix> coeffs,
                                     Matrix mass)
    : n_(n), d_(d), mass_(std::move(mass)), coeffs_(std::move(coeffs)) {
  if (n_ < 1) throw std::invalid_argument("CoefficientSystem: n >= 1 required");
  if (d_ < 1) throw std::invalid_argument("CoefficientSystem: d >= 1 required");
  validate_mass(mass_, n_);
  mass_identity_ = mass_.isIdentity(1e-14);

  bool any_positive_order = false;
  for (const auto& [alpha, mat] : coeffs_) {
    if (alpha.dim() != d_)
      throw std::invalid_argument("CoefficientSystem: multi-index dimension != d");
    if (mat.rows() != n_ || mat.cols() != n_)
      throw std::invalid_argument("CoefficientSystem: coefficient for " + alpha.str() +
                                  " must be n x n");
    m_ = std::max(m_, alpha.order());
    if (alpha.order() >= 1) any_positive_order = true;
    if (alpha.order() == 0 && mat.norm() > 0.0) has_relaxation_ = true;
  }
  if (!any_positive_order)
    throw std::invalid_argument("CoefficientSystem: at least one coefficient of order >= 1");
}

CoefficientSystem::CoefficientSystem(int n, int d, std::map<MultiIndex, Matrix> coeffs)
    : CoefficientSystem(n, d, std::move(coeffs), Matrix::Identity(n, n)) {}

const Matrix* CoefficientSystem::coeff(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? nullptr : &it->second;
}

std::string CoefficientSystem::to_document() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  out << "d " << d_ << "\n";
  out << "m " << m_ << "\n";
  out << "mass";
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out << ' ' << format_double(mass_(i, j));
  out << "\n";
  for (const auto& [alpha, mat] : coeffs_) {
    out << "alpha";
    for (int k = 0; k < d_; ++k) out << ' ' << alpha[k];
    out << " :";
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out << ' ' << format_double(mat(i, j));
    out << "\n";
  }
  return out.str();
}

CoefficientSystem CoefficientSystem::from_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, d = -1, m_declared = -1;
  Matrix mass;
  std::map<MultiIndex, Matrix> coeffs;
  int line_no = 0;

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("CoefficientSystem document, line " + std::to_string(line_no) +
                                ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    auto read_doubles = [&](Eigen::Index count) {
      Vector v(count);
      std::string tok;
      for (Eigen::Index i = 0; i < count; ++i) {
        if (!(ls >> tok)) fail("expected " + std::to_string(count) + " numbers");
        auto parsed = parse_double(tok);
        if (!parsed) fail("bad number '" + tok + "'");
        v[i] = *parsed;
      }
      return v;
    };

    if (key == "n" || key == "d" || key == "m") {
      std::string tok;
      if (!(ls >> tok)) fail("expected integer after '" + key + "'");
      auto parsed = parse_int(tok);
      if (!parsed || *parsed < 0) fail("bad integer '" + tok + "'");
      (key == "n" ? n : key == "d" ? d : m_declared) = static_cast<int>(*parsed);
    } else if (key == "mass") {
      if (n < 0) fail("'mass' before 'n'");
      Vector v = read_doubles(static_cast<Eigen::Index>(n) * n);
      mass = Eigen::Map<const Matrix>(v.data(), n, n).transpose();  // row-major list
    } else if (key == "alpha") {
      if (n < 0 || d < 0) fail("'alpha' before 'n'/'d'");
      std::vector<int> idx(static_cast<std::size_t>(d));
      std::string tok;
      for (int k = 0; k < d; ++k) {
        if (!(ls >> tok)) fail("expected " + std::to_string(d) + " multi-index entries");
        auto parsed = parse_int(tok);
        if (!parsed || *parsed < 0) fail("bad multi-index entry '" + tok + "'");
        idx[static_cast<std::size_t>(k)] = static_cast<int>(*parsed);
      }
      if (!(ls >> tok) || tok != ":") fail("expected ':' after multi-index");
      Vector v = read_doubles(static_cast<Eigen::Index>(n) * n);
      MultiIndex alpha(idx);
      if (coeffs.count(alpha)) fail("duplicate multi-index " + alpha.str());
      coeffs.emplace(alpha, Eigen::Map<const Matrix>(v.data(), n, n).transpose());
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (n < 0 || d < 0) throw std::invalid_argument("CoefficientSystem document: missing n or d");
  if (mass.size() == 0) mass = Matrix::Identity(n, n);
  CoefficientSystem sys(n, d, std::move(coeffs), std::move(mass));
  if (m_declared >= 0 && m_declared != sys.max_order())
    throw std::invalid_argument("CoefficientSystem document: declared m=" +
                                std::to_string(m_declared) + " but coefficients have m=" +
                                std::to_string(sys.max_order()));
  return sys;
}

}  // namespace dissipa
