#include <doctest.h>

#include <random>

#include "dissipa/coefficient_system.hpp"
#include "dissipa/models.hpp"
#include "dissipa/symbols.hpp"

using namespace dissipa;

namespace {

CoefficientSystem heat1d_sys() { return build_heat1d().system; }

CoefficientSystem transport1d() {
  std::map<MultiIndex, Matrix> c;
  c.emplace(MultiIndex{1}, Matrix::Constant(1, 1, 1.0));
  return {1, 1, std::move(c)};
}

CoefficientSystem airy1d() {
  std::map<MultiIndex, Matrix> c;
  c.emplace(MultiIndex{3}, Matrix::Constant(1, 1, 1.0));
  return {1, 1, std::move(c)};
}

// Roots of det(z*A0 + M0) for a 3x3 pencil, via the companion matrix of the
// characteristic polynomial recovered by interpolation. Independent of the
// eigenvalue route used by dispersion_eigenvalues.
CVector cubic_pencil_roots(const CMatrix& a0, const CMatrix& m0) {
  auto det3 = [](const CMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  };
  const Complex nodes[4] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}};
  Eigen::Matrix<Complex, 4, 4> v;
  Eigen::Vector<Complex, 4> rhs;
  for (int k = 0; k < 4; ++k) {
    for (int j = 0; j < 4; ++j) v(k, j) = std::pow(nodes[k], j);
    rhs[k] = det3(nodes[k] * a0 + m0);
  }
  const Eigen::Vector<Complex, 4> coef = v.fullPivLu().solve(rhs);
  CMatrix comp = CMatrix::Zero(3, 3);
  comp(1, 0) = comp(2, 1) = 1.0;
  for (int j = 0; j < 3; ++j) comp(j, 2) = -coef[j] / coef[3];
  return Eigen::ComplexEigenSolver<CMatrix>(comp).eigenvalues();
}

}  // namespace

TEST_CASE("multi-index ordering, order, validation") {
  MultiIndex a{2, 0, 1};
  CHECK(a.order() == 3);
  CHECK(a.dim() == 3);
  CHECK(a == MultiIndex({2, 0, 1}));
  CHECK(MultiIndex{0, 1} < MultiIndex{1, 0});
  CHECK_THROWS_AS(MultiIndex({-1, 0}), std::invalid_argument);
  std::map<MultiIndex, int> m;
  m[MultiIndex{1, 0}] = 1;
  m[MultiIndex{1, 0}] = 2;
  CHECK(m.size() == 1);
}

TEST_CASE("coefficient system validation") {
  std::map<MultiIndex, Matrix> c;
  c.emplace(MultiIndex{2}, -Matrix::Identity(1, 1));
  CHECK_THROWS(CoefficientSystem(1, 1, {}, Matrix::Identity(1, 1)));  // no order >= 1
  Matrix bad_mass = -Matrix::Identity(1, 1);
  CHECK_THROWS_AS(CoefficientSystem(1, 1, c, bad_mass), std::domain_error);
  CoefficientSystem sys(1, 1, c);
  CHECK(sys.max_order() == 2);
  CHECK(!sys.has_relaxation());
  CHECK(sys.mass_is_identity());
}

TEST_CASE("frequency point") {
  CHECK_THROWS_AS(FrequencyPoint::from_xi(Vector::Zero(2)), std::domain_error);
  auto p = FrequencyPoint::from_xi(Vector{{3.0, 4.0}});
  CHECK(p.radius == doctest::Approx(5.0));
  CHECK(std::abs(p.direction.norm() - 1.0) < 1e-14);
  CHECK((p.radius * p.direction - p.xi).norm() < 1e-12 * p.radius);
}

TEST_CASE("assemble: 1-D heat at xi=2 gives A=0, B=4") {
  auto sp = assemble_symbols(heat1d_sys(), FrequencyPoint::from_xi(Vector::Constant(1, 2.0)));
  CHECK(sp.a_sym(0, 0) == doctest::Approx(0.0));
  CHECK(sp.b_sym(0, 0) == doctest::Approx(4.0));
}

TEST_CASE("assemble: 1-D Airy at xi=1 gives A=-1, B=0 and i|xi|A = (i xi)^3") {
  auto p = FrequencyPoint::from_xi(Vector::Constant(1, 1.0));
  auto sp = assemble_symbols(airy1d(), p);
  CHECK(sp.a_sym(0, 0) == doctest::Approx(-1.0));
  CHECK(sp.b_sym(0, 0) == doctest::Approx(0.0));
  const Complex lhs = Complex(0, 1) * p.radius * sp.a_sym(0, 0);
  const Complex rhs = std::pow(Complex(0, 1) * 1.0, 3);
  CHECK(std::abs(lhs - rhs) < 1e-15);
}

TEST_CASE("assemble: NSK entry (2,1) is beta(xi) omega_1 = 2 at xi=(1,0)") {
  auto sys = build_nsk2d().system;
  auto sp = assemble_symbols(sys, FrequencyPoint::from_xi(Vector{{1.0, 0.0}}));
  CHECK(sp.a_sym(1, 0) == doctest::Approx(2.0));  // p_rho + k rho |xi|^2 = 2
}

TEST_CASE("raw symbol: xi = 0 returns the relaxation block; QHD 1/tau diagonal") {
  auto sys = build_qhd_iso().system;
  auto s0 = raw_symbol(sys, Vector::Zero(3));
  CHECK(std::abs(s0(1, 1) - Complex(1.0, 0.0)) < 1e-15);  // 1/tau
  CHECK(std::abs(s0(0, 0)) < 1e-15);
  auto s = raw_symbol(sys, Vector{{1.0, 0.0, 0.0}});
  CHECK(std::abs(s(1, 1).real() - 1.0) < 1e-15);
  CHECK(std::abs(s(2, 2).real() - 1.0) < 1e-15);
  CHECK(std::abs(s(3, 3).real() - 1.0) < 1e-15);
}

TEST_CASE("raw symbol: 1-D transport at xi=3 is 3i") {
  auto s = raw_symbol(transport1d(), Vector::Constant(1, 3.0));
  CHECK(std::abs(s(0, 0) - Complex(0.0, 3.0)) < 1e-15);
}

TEST_CASE("dispersion: heat at xi=2 -> {-4}; transport at xi=3 -> {-3i}") {
  auto d1 =
      dispersion_eigenvalues(heat1d_sys(), FrequencyPoint::from_xi(Vector::Constant(1, 2.0)));
  REQUIRE(d1.ok);
  CHECK(std::abs(d1.values[0] - Complex(-4.0, 0.0)) < 1e-12);
  auto d2 =
      dispersion_eigenvalues(transport1d(), FrequencyPoint::from_xi(Vector::Constant(1, 3.0)));
  REQUIRE(d2.ok);
  CHECK(std::abs(d2.values[0] - Complex(0.0, -3.0)) < 1e-12);
  CHECK(std::abs(d2.values[0].real()) < 1e-12);
}

TEST_CASE("dispersion: EFK-1D eigenvalues match the characteristic-polynomial oracle") {
  auto sys = build_efk1d().system;
  auto p = FrequencyPoint::from_xi(Vector::Constant(1, 1.0));
  auto dr = dispersion_eigenvalues(sys, p);
  REQUIRE(dr.ok);
  REQUIRE(dr.values.size() == 3);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(dr.values[i].real() < 0.0);

  auto sp = assemble_symbols(sys, p);
  const CMatrix m0 =
      Complex(0, 1) * p.radius * sp.a_sym.cast<Complex>() + sp.b_sym.cast<Complex>();
  CVector oracle = cubic_pencil_roots(sys.mass().cast<Complex>(), m0);
  for (Eigen::Index i = 0; i < 3; ++i) {
    double best = 1e300;
    for (Eigen::Index j = 0; j < 3; ++j)
      best = std::min(best, std::abs(dr.values[i] - oracle[j]));
    CHECK(best < 1e-10);
  }
}

TEST_CASE("property: reconstruction identity on 1000 random systems") {
  std::mt19937_64 rng(kDefaultSeed);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> n_dist(1, 5), d_dist(1, 3), m_dist(1, 4);
  const Complex iu(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = n_dist(rng), d = d_dist(rng), m = m_dist(rng);
    std::map<MultiIndex, Matrix> coeffs;
    for (int order = 1; order <= m; ++order) {
      std::vector<int> idx(static_cast<std::size_t>(d), 0);
      for (int k = 0; k < order; ++k)
        idx[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, d - 1)(rng))] += 1;
      Matrix mat(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat(i, j) = normal(rng);
      coeffs[MultiIndex(idx)] = mat;
    }
    CoefficientSystem sys(n, d, std::move(coeffs));
    for (int f = 0; f < 10; ++f) {
      Vector xi(d);
      for (int k = 0; k < d; ++k) xi[k] = normal(rng);
      if (xi.norm() < 1e-8) continue;
      const auto p = FrequencyPoint::from_xi(xi);
      const auto sp = assemble_symbols(sys, p);
      const CMatrix lhs = iu * p.radius * sp.a_sym.cast<Complex>() + sp.b_sym.cast<Complex>();
      const CMatrix rhs = raw_symbol(sys, xi);
      const double tol =
          1e-12 * (1.0 + std::pow(p.radius, sys.max_order())) * (1.0 + rhs.norm());
      REQUIRE((lhs - rhs).norm() <= tol);
    }
  }
}

TEST_CASE("property: eigenvalues invariant under folding the mass matrix") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3, d = 2;
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
    Matrix mass = g * g.transpose() + 0.5 * Matrix::Identity(n, n);
    std::map<MultiIndex, Matrix> coeffs, folded;
    for (auto alpha : {MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{2, 0}, MultiIndex{1, 2}}) {
      Matrix mat(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat(i, j) = normal(rng);
      coeffs[alpha] = mat;
      folded[alpha] = mass.lu().solve(mat);
    }
    CoefficientSystem with_mass(n, d, coeffs, mass);
    CoefficientSystem with_identity(n, d, folded);
    const auto p = FrequencyPoint::from_xi(Vector{{0.3, -1.1}});
    auto e1 = dispersion_eigenvalues(with_mass, p);
    auto e2 = dispersion_eigenvalues(with_identity, p);
    REQUIRE(e1.ok);
    REQUIRE(e2.ok);
    for (int i = 0; i < n; ++i) {
      double best = 1e300;
      for (int j = 0; j < n; ++j) best = std::min(best, std::abs(e1.values[i] - e2.values[j]));
      const double scale = 1.0 + e1.values.cwiseAbs().maxCoeff();
      CHECK(best <= 1e-9 * scale);
    }
  }
}

TEST_CASE("property: odd-order systems with symmetric coefficients have imaginary spectrum") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4, d = 2;
    std::map<MultiIndex, Matrix> coeffs;
    for (auto alpha : {MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{3, 0}, MultiIndex{1, 2}}) {
      Matrix g(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
      coeffs[alpha] = sym_part(g);
    }
    CoefficientSystem sys(n, d, std::move(coeffs));
    const auto p = FrequencyPoint::from_xi(Vector{{normal(rng), 1.0 + std::abs(normal(rng))}});
    auto dr = dispersion_eigenvalues(sys, p);
    REQUIRE(dr.ok);
    const double scale = 1.0 + dr.values.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < dr.values.size(); ++i)
      CHECK(std::abs(dr.values[i].real()) <= 1e-9 * scale);
  }
}

TEST_CASE("document round-trip is bit-identical") {
  NskParams params;
  params.rho = 0.7;
  params.p_rho = 1.3;
  params.capillarity = 0.9;
  params.nu = 1.1;
  params.lambda_visc = -0.4;
  params.u = Vector{{0.123456789012345678, -3.25}};
  auto sys = build_nsk2d(params).system;
  const std::string doc = sys.to_document();
  auto back = CoefficientSystem::from_document(doc);
  CHECK(back.to_document() == doc);
  CHECK(back.state_dim() == 3);
  CHECK(back.space_dim() == 2);
  CHECK(back.max_order() == 3);
  for (const auto& [alpha, mat] : sys.coeffs()) {
    REQUIRE(back.coeff(alpha) != nullptr);
    CHECK((*back.coeff(alpha) - mat).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK((back.mass() - sys.mass()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("document parser rejects malformed input") {
  CHECK_THROWS_AS(CoefficientSystem::from_document("n 2\nd 1\nalpha 1 : 1 2 3 4\nm 7\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CoefficientSystem::from_document("d 1\nalpha 1 : 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientSystem::from_document("n 1\nd 1\nalpha 1 : nope\n"),
                  std::invalid_argument);
}
