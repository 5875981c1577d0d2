#include "dissipa/symbols.hpp"

#include <cmath>

#include "dissipa/denselin.hpp"

namespace dissipa {

SymbolPair assemble_symbols(const CoefficientSystem& sys, const FrequencyPoint& p) {
  const int n = sys.state_dim();
  Matrix a = Matrix::Zero(n, n);
  Matrix b = Matrix::Zero(n, n);
  for (const auto& [alpha, mat] : sys.coeffs()) {
    const int k = alpha.order();
    const double om = monomial(p.direction, alpha);
    if (k % 2 == 1) {
      const double sign = (k - 1) / 2 % 2 == 0 ? 1.0 : -1.0;
      a += sign * std::pow(p.radius, k - 1) * om * mat;
    } else {
      const double sign = k / 2 % 2 == 0 ? 1.0 : -1.0;
      b += sign * std::pow(p.radius, k) * om * mat;
    }
  }
  return SymbolPair{std::move(a), std::move(b), p};
}

CMatrix raw_symbol(const CoefficientSystem& sys, const Vector& xi) {
  const int n = sys.state_dim();
  CMatrix s = CMatrix::Zero(n, n);
  for (const auto& [alpha, mat] : sys.coeffs()) s += i_monomial(xi, alpha) * mat;
  return s;
}

double DispersionResult::max_re() const {
  double m = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < values.size(); ++i) m = std::max(m, values[i].real());
  return m;
}

DispersionResult dispersion_eigenvalues(const CoefficientSystem& sys, const FrequencyPoint& p) {
  DispersionResult out;
  out.at = p;
  const SymbolPair sp = assemble_symbols(sys, p);
  const Complex i(0.0, 1.0);
  const CMatrix pencil = i * p.radius * sp.a_sym.cast<Complex>() + sp.b_sym.cast<Complex>();

  CMatrix t;
  if (sys.mass_is_identity()) {
    t = -pencil;
  } else {
    t = -sys.mass().cast<Complex>().lu().solve(pencil);
  }
  SpectralDecomposition dec = eig_general(t);
  if (!dec.converged) {
    out.ok = false;
    out.message = "dispersion eigensolver failure at |xi| = " + std::to_string(p.radius) + ": " +
                  dec.diagnostic;
    return out;
  }
  out.values = std::move(dec.values);
  out.vectors = std::move(dec.vectors);

  const double scale = pencil.norm() + sys.mass().norm();
  out.residuals.resize(out.values.size());
  for (Eigen::Index k = 0; k < out.values.size(); ++k) {
    out.residuals[k] =
        ((out.values[k] * sys.mass().cast<Complex>() + pencil) * out.vectors.col(k)).norm();
    if (out.residuals[k] > 1e-9 * (scale + std::abs(out.values[k]) * sys.mass().norm())) {
      out.ok = false;
      out.message = "dispersion residual above contract at |xi| = " + std::to_string(p.radius);
    }
  }
  return out;
}

}  // namespace dissipa
