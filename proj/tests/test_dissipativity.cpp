#include <doctest.h>

#include <random>

#include "dissipa/dissipativity.hpp"
#include "dissipa/errors.hpp"
#include "dissipa/models.hpp"

using namespace dissipa;

namespace {

CoefficientSystem transport1d() {
  std::map<MultiIndex, Matrix> c;
  c.emplace(MultiIndex{1}, Matrix::Constant(1, 1, 1.0));
  return {1, 1, std::move(c)};
}

FrequencyGrid radii_only_grid(const CoefficientSystem& sys, std::vector<double> radii) {
  FrequencyGrid g;
  g.directions = sphere_directions(sys.space_dim(), sys.space_dim() == 1 ? 2 : 8);
  g.radii = std::move(radii);
  for (const auto& omega : g.directions)
    for (double r : g.radii) g.points.push_back(FrequencyPoint::from_polar(r, omega));
  return g;
}

}  // namespace

TEST_CASE("grid shapes: d=1 directions, default cardinality, Fibonacci nodes") {
  auto g1 = make_grid(1, 1.0, 10.0, 1, 5);
  REQUIRE(g1.directions.size() == 2);
  CHECK(g1.directions[0][0] == doctest::Approx(1.0));
  CHECK(g1.directions[1][0] == doctest::Approx(-1.0));

  auto g2 = default_grid(2);
  CHECK(g2.directions.size() == 64);
  CHECK(g2.radii.size() == 97);  // 6 decades at 16 per decade, inclusive
  CHECK(g2.points.size() == 64 * 97);
  CHECK(g2.radii.front() == doctest::Approx(1e-3));
  CHECK(g2.radii.back() == doctest::Approx(1e3));

  auto g3 = default_grid(3);
  CHECK(g3.directions.size() == 144);
  for (const auto& w : g3.directions) CHECK(std::abs(w.norm() - 1.0) < 1e-14);
}

TEST_CASE("sweep: heat max_re at radii {1,2,4}") {
  auto heat = build_heat1d();
  auto grid = radii_only_grid(heat.system, {1.0, 2.0, 4.0});
  auto records = sweep(heat.system, heat.symmetrizer, grid, {});
  REQUIRE(records.size() == 6);  // two directions
  CHECK(records[0].max_re == doctest::Approx(-1.0));
  CHECK(records[1].max_re == doctest::Approx(-4.0));
  CHECK(records[2].max_re == doctest::Approx(-16.0));
  for (const auto& r : records) CHECK(r.ok);
}

TEST_CASE("sweep: EFK d=2 has a purely imaginary mode; NSK all strictly negative") {
  auto efk = build_efk_md(2);
  auto grid_e = make_grid(2, 0.1, 10.0, 4, 8);
  auto rec_e = sweep(efk.system, std::nullopt, grid_e, {});
  bool some_zero = false;
  for (const auto& r : rec_e) some_zero = some_zero || std::abs(r.max_re) <= 1e-9;
  CHECK(some_zero);

  auto nsk = build_nsk2d();
  auto grid_n = make_grid(2, 1e-2, 1e2, 4, 8);
  SweepOptions opts;
  opts.strategy = CompensatorStrategy::Drazin;
  auto rec_n = sweep(nsk.system, nsk.symmetrizer, grid_n, opts);
  for (const auto& r : rec_n) {
    REQUIRE(r.ok);
    CHECK(r.max_re < 0.0);
    REQUIRE(r.theta.has_value());
    CHECK(*r.theta > 0.0);
  }
}

TEST_CASE("certify_strict: heat passes, pure transport fails with a zero witness") {
  auto heat = build_heat1d();
  auto grid = radii_only_grid(heat.system, {0.5, 1.0, 2.0});
  CHECK(certify_strict(sweep(heat.system, std::nullopt, grid, {}), 1e-9).pass);

  auto tr = transport1d();
  auto rec = sweep(tr, std::nullopt, radii_only_grid(tr, {1.0, 3.0}), {});
  auto verdict = certify_strict(rec, 1e-9);
  CHECK(!verdict.pass);
  CHECK(std::abs(verdict.worst.max_re) <= 1e-12);

  auto efk3 = build_efk_md(3);
  auto rec3 = sweep(efk3.system, std::nullopt, make_grid(3, 0.5, 2.0, 2, 8), {});
  CHECK(!certify_strict(rec3, 1e-9).pass);
}

TEST_CASE("classify_type: heat (1,0), EFK-1D (1,1), DNSF-3D (1,2); precondition checks") {
  auto heat = build_heat1d();
  auto grid1 = make_grid(1, 1e-3, 1e3, 16, 2);
  auto cls = classify_type(sweep(heat.system, std::nullopt, grid1, {}));
  CHECK(cls.p == 1);
  CHECK(cls.q == 0);
  CHECK(cls.kind == DecayKind::RegularityGain);
  CHECK(cls.low_slope == doctest::Approx(2.0).epsilon(0.08));
  CHECK(cls.high_slope == doctest::Approx(2.0).epsilon(0.08));
  CHECK(cls.c_fit > 0.0);

  auto efk = build_efk1d();
  auto cls_e = classify_type(sweep(efk.system, std::nullopt, grid1, {}));
  CHECK(cls_e.p == 1);
  CHECK(cls_e.q == 1);
  CHECK(cls_e.kind == DecayKind::Standard);

  auto dnsf = build_dnsf(3);
  auto grid3 = make_grid(3, 1e-3, 1e3, 12, 16);
  auto cls_d = classify_type(sweep(dnsf.system, std::nullopt, grid3, {}));
  CHECK(cls_d.p == 1);
  CHECK(cls_d.q == 2);
  CHECK(cls_d.kind == DecayKind::RegularityLoss);
  CHECK(std::abs(cls_d.high_slope + 2.0) < 0.15);

  // Preconditions: span and density.
  auto small = sweep(heat.system, std::nullopt, make_grid(1, 0.1, 10.0, 16, 2), {});
  CHECK_THROWS_AS(classify_type(small), std::invalid_argument);
  auto sparse = sweep(heat.system, std::nullopt, make_grid(1, 1e-3, 1e3, 4, 2), {});
  CHECK_THROWS_AS(classify_type(sparse), std::invalid_argument);
  auto tr = transport1d();
  auto flat = sweep(tr, std::nullopt, make_grid(1, 1e-3, 1e3, 16, 2), {});
  CHECK_THROWS_AS(classify_type(flat), std::invalid_argument);  // max_re = 0
}

TEST_CASE("asymptotic_fit: heat branch has unit (i xi)^2 coefficient") {
  auto heat = build_heat1d();
  auto fit = asymptotic_fit(heat.system, 1, {3, 2, 1, 0, -1, -2}, log_radii(1e2, 1e4, 16));
  REQUIRE(fit.branches.size() == 1);
  const auto& c = fit.branches[0].coefficients;
  CHECK(std::abs(c.at(2) - Complex(1.0, 0.0)) < 1e-9);
  CHECK(std::abs(c.at(3)) < 1e-9);
  CHECK(fit.branches[0].residual < 1e-9);
}

TEST_CASE("asymptotic_fit: DNSF-1D branch coefficients at unit parameters") {
  auto dnsf = build_dnsf(1);
  auto fit = asymptotic_fit(dnsf.system, 1, {3, 2, 1, 0, -1, -2}, log_radii(1e2, 1e4, 32));
  REQUIRE(fit.branches.size() == 3);

  // Identify the dispersive branches by their (i xi)^3 coefficient and the
  // diffusion-free branch by its absence.
  const double big3 = (8.0 / 9.0) * std::sqrt(1.5);
  int n_dispersive = 0;
  for (const auto& b : fit.branches) {
    const Complex c3 = b.coefficients.at(3);
    if (std::abs(c3) > 0.5) {
      ++n_dispersive;
      CHECK(std::abs(std::abs(c3.real()) - big3) < 1e-6);
      CHECK(std::abs(b.coefficients.at(2) - Complex(1.0, 0.0)) < 1e-6);
    } else {
      // rho-branch: lambda^(3) = ... = lambda^(-1) = 0 and
      // lambda^(-2) = (9/16) rho alpha theta^2 / tau4^2, the exact
      // high-frequency coefficient of this pencil (cross-checked below
      // against a 50-digit reference root).
      CHECK(std::abs(c3) < 1e-8);
      CHECK(std::abs(b.coefficients.at(2)) < 1e-8);
      CHECK(std::abs(b.coefficients.at(1)) < 1e-8);
      CHECK(std::abs(b.coefficients.at(0)) < 1e-8);
      CHECK(std::abs(b.coefficients.at(-1)) < 1e-4);
      CHECK(std::abs(b.coefficients.at(-2) - Complex(9.0 / 16.0, 0.0)) < 1e-3);
      // High-precision oracle values of -Re(lambda) xi^2 (frozen from a
      // 50-digit evaluation of the same pencil).
      const double oracle_1e2 = 0.562373458064;
      const Eigen::Index k0 = 0;  // radii start at 1e2
      CHECK(std::abs(-b.lambda[k0].real() * 1e4 - oracle_1e2) < 1e-9);
    }
  }
  CHECK(n_dispersive == 2);
}

TEST_CASE("asymptotic_fit: residual decreases as the radius window moves out") {
  auto dnsf = build_dnsf(1);
  auto low_fit = asymptotic_fit(dnsf.system, 1, {3, 2, 1, 0, -1, -2}, log_radii(1e2, 1e3, 32));
  auto high_fit = asymptotic_fit(dnsf.system, 1, {3, 2, 1, 0, -1, -2}, log_radii(1e3, 1e4, 32));
  double low_worst = 0.0, high_worst = 0.0;
  for (const auto& b : low_fit.branches) low_worst = std::max(low_worst, b.residual);
  for (const auto& b : high_fit.branches) high_worst = std::max(high_worst, b.residual);
  CHECK(high_worst <= low_worst);
}

TEST_CASE("asymptotic_fit rejects bad inputs") {
  auto dnsf3 = build_dnsf(3);
  CHECK_THROWS_AS(asymptotic_fit(dnsf3.system, 1, {1}, log_radii(1e2, 1e4, 4)),
                  std::invalid_argument);
  auto heat = build_heat1d();
  CHECK_THROWS_AS(asymptotic_fit(heat.system, 2, {1}, log_radii(1e2, 1e4, 4)),
                  std::invalid_argument);
}

TEST_CASE("direction isotropy for ubar = 0 models") {
  for (const auto& name : {"nsk2d", "nsfk3d", "qhd-iso"}) {
    auto bundle = build_by_name(name);
    const int d = bundle.system.space_dim();
    for (double r : {0.3, 1.7, 42.0}) {
      double lo = 1e300, hi = -1e300;
      for (const auto& w : sphere_directions(d, d == 2 ? 12 : 24)) {
        auto dr = dispersion_eigenvalues(bundle.system, FrequencyPoint::from_polar(r, w));
        REQUIRE(dr.ok);
        lo = std::min(lo, dr.max_re());
        hi = std::max(hi, dr.max_re());
      }
      CHECK(hi - lo <= 1e-8 * (1.0 + std::abs(lo)));
    }
  }
}

TEST_CASE("projection continuity diagnostic stays small along catalog sweeps") {
  auto nsk = build_nsk2d();
  const double jump = projection_jump_diagnostic(
      nsk.system, *nsk.symmetrizer, Vector{{0.6, 0.8}}, log_radii(1e-2, 1e2, 32));
  CHECK(jump < 0.05);
}

TEST_CASE("empty inputs are contract errors") {
  auto heat = build_heat1d();
  FrequencyGrid empty;
  CHECK_THROWS_AS(sweep(heat.system, std::nullopt, empty, {}), std::invalid_argument);
  CHECK_THROWS_AS(certify_strict({}, 1e-9), std::invalid_argument);
}
