#include <doctest.h>

#include <random>

#include "dissipa/errors.hpp"
#include "dissipa/evolution.hpp"
#include "dissipa/models.hpp"

using namespace dissipa;

TEST_CASE("propagate_point: t = 0 identity; heat scalar decay; NSK non-expansive") {
  Matrix a = Matrix::Zero(1, 1);
  Matrix b = Matrix::Constant(1, 1, 1.0);
  CVector v0 = CVector::Constant(1, Complex(0.4, -0.3));
  CHECK((propagate_point(a, b, 1.0, v0, 0.0) - v0).norm() < 1e-14);

  auto heat = build_heat1d();
  auto p = FrequencyPoint::from_xi(Vector::Constant(1, 1.0));
  auto sp = symmetrize(heat.system, *heat.symmetrizer, p);
  auto v = propagate_point(sp, CVector::Constant(1, Complex(1.0, 0.0)), 2.0);
  CHECK(std::abs(v[0] - Complex(std::exp(-2.0), 0.0)) < 1e-12);

  auto nsk = build_nsk2d();
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  auto q = FrequencyPoint::from_xi(Vector{{1.0, 0.0}});
  auto spq = symmetrize(nsk.system, *nsk.symmetrizer, q);
  for (int trial = 0; trial < 20; ++trial) {
    CVector v0q(3);
    for (int i = 0; i < 3; ++i) v0q[i] = Complex(normal(rng), normal(rng));
    v0q /= v0q.norm();
    double prev = 1.0;
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
      const double now = propagate_point(spq, v0q, t).norm();
      CHECK(now <= prev + 1e-12);  // B_S >= 0 forbids growth
      prev = now;
    }
  }
}

TEST_CASE("property: energy identity d/dt |V|^2 / 2 = -<V, B_S V>") {
  auto nsk = build_nsk2d();
  std::mt19937_64 rng(13);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    Vector xi(2);
    xi << normal(rng), normal(rng);
    if (xi.norm() < 0.1) continue;
    auto p = FrequencyPoint::from_xi(xi);
    auto sp = symmetrize(nsk.system, *nsk.symmetrizer, p);
    CVector v0(3);
    for (int i = 0; i < 3; ++i) v0[i] = Complex(normal(rng), normal(rng));
    v0 /= v0.norm();
    const double t0 = 0.3;
    const double dt = 1e-6;
    const CVector v = propagate_point(sp, v0, t0);
    const CVector vp = propagate_point(sp, v0, t0 + dt);
    const double lhs = (0.5 * vp.squaredNorm() - 0.5 * v.squaredNorm()) / dt;
    const double rhs = -(v.adjoint() * sp.b_s.cast<Complex>() * v)[0].real();
    const double scale = 1.0 + std::abs(rhs) + sp.b_s.norm();
    CHECK(std::abs(lhs - rhs) <= 1e-4 * scale);  // O(dt) finite difference
  }
}

TEST_CASE("verify_envelope: heat with g == 1 gives C = 1, k = 1, zero violations") {
  auto heat = build_heat1d();
  EnvelopeSpec spec;
  spec.kind = EnvelopeSpec::Kind::RelaxationFree;
  spec.margin_fn = [](const FrequencyPoint&) { return 1.0; };
  auto grid = make_grid(1, 1e-2, 1e2, 4, 2);
  auto rep = verify_envelope(heat.system, *heat.symmetrizer, spec, grid, {});
  CHECK(rep.violations == 0);
  CHECK(rep.c_fit == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.k_fit == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("verify_envelope: EFK-1D with g = sigma/(1+xi^2); QHD with f = 1/(6 tau)") {
  auto efk = build_efk1d();
  EnvelopeSpec spec_e;
  spec_e.kind = EnvelopeSpec::Kind::RelaxationFree;
  spec_e.margin_fn = [](const FrequencyPoint& p) {
    return 0.05 / (1.0 + p.radius * p.radius);
  };
  auto grid_e = make_grid(1, 1e-2, 1e2, 4, 2);
  auto rep_e = verify_envelope(efk.system, *efk.symmetrizer, spec_e, grid_e, {});
  CHECK(rep_e.violations == 0);
  CHECK(rep_e.k_fit > 0.0);

  auto qhd = build_qhd_iso();
  EnvelopeSpec spec_q;
  spec_q.kind = EnvelopeSpec::Kind::Full;
  spec_q.margin_fn = [](const FrequencyPoint&) { return 1.0 / 6.0; };
  auto grid_q = make_grid(3, 1e-2, 1e2, 3, 12);
  auto rep_q = verify_envelope(qhd.system, *qhd.symmetrizer, spec_q, grid_q, {});
  CHECK(rep_q.violations == 0);
  CHECK(rep_q.k_fit > 0.0);
}

TEST_CASE("verify_envelope flags a margin that is too optimistic") {
  // Claiming the heat envelope with g = 3 and C = k = 1 must fail:
  // |V| = exp(-x) but the claim demands exp(-3x).
  auto heat = build_heat1d();
  EnvelopeSpec spec;
  spec.kind = EnvelopeSpec::Kind::RelaxationFree;
  spec.margin_fn = [](const FrequencyPoint&) { return 3.0; };
  EnvelopeOptions opts;
  opts.assert_c = 1.0;
  opts.assert_k = 1.0;
  auto rep = verify_envelope(heat.system, *heat.symmetrizer, spec,
                             make_grid(1, 0.1, 10.0, 3, 2), opts);
  CHECK(rep.violations > 0);
}

TEST_CASE("l2_decay: EFK-1D exponent -1/4") {
  auto efk = build_efk1d();
  InitialData init;
  auto series =
      l2_decay(efk.system, *efk.symmetrizer, init, 0, log_radii(1.0, 1e4, 4), {});
  CHECK(series.doubling_error < 0.01);
  CHECK(series.fitted_rate == doctest::Approx(-0.25).epsilon(0.4));
  CHECK(std::abs(series.fitted_rate + 0.25) < 0.1);
}

TEST_CASE("l2_decay: t = 0 reproduces the initial norm; profiles are finite") {
  auto nsk = build_nsk2d();
  for (auto profile : {InitialData::Profile::Gaussian, InitialData::Profile::CompactBump,
                       InitialData::Profile::InversePoly}) {
    InitialData init;
    init.profile = profile;
    QuadratureOptions opts;
    opts.points_per_decade = 12;
    auto series = l2_decay(nsk.system, *nsk.symmetrizer, init, 0, {0.0, 1.0}, opts);
    CHECK(series.norms[0] > 0.0);
    CHECK(std::isfinite(series.norms[0]));
    CHECK(series.norms[1] < series.norms[0]);
    CHECK(series.l1_surrogate > 0.0);
  }
}

TEST_CASE("l2_decay: DNSF regularity-loss signature for high-frequency data") {
  auto dnsf = build_dnsf(1);
  auto gain = build_nsk2d();  // regularity-gain contrast

  // Data concentrated in the high-frequency band [20, 50].
  QuadratureOptions opts;
  opts.r_min = 20.0;
  opts.r_max = 50.0;
  opts.points_per_decade = 48;
  opts.weighted_component = -1;
  opts.doubling_tol = 0.1;  // dispersive cross terms oscillate inside the band
  InitialData flat;
  flat.profile = InitialData::Profile::InversePoly;
  flat.width = 100.0;  // effectively flat over the band

  const std::vector<double> times = {0.0, 1.0, 10.0};
  auto loss = l2_decay(dnsf.system, *dnsf.symmetrizer, flat, 0, times, opts);
  auto wiped = l2_decay(gain.system, *gain.symmetrizer, flat, 0, times, opts);

  // High-frequency content barely decays for the loss-type system
  // (rate ~ 1/xi^2) but is annihilated at rate ~ xi^2 for the gain-type one.
  CHECK(loss.norms[2] / loss.norms[0] > 0.5);
  CHECK(wiped.norms[2] / wiped.norms[0] < 1e-8);

  // Regularity-loss trade-off: the k-weighted data controls the decay,
  // ||U(t)|| <= C (1+t)^{-k/2} ||D^k U0|| with a moderate constant on the band.
  auto weighted = l2_decay(dnsf.system, *dnsf.symmetrizer, flat, 1, {0.0}, opts);
  for (std::size_t it = 1; it < times.size(); ++it) {
    const double bound = weighted.norms[0] / std::sqrt(1.0 + times[it]);
    CHECK(loss.norms[it] <= 5.0 * bound);
  }
}

TEST_CASE("l2_decay rejects an unresolvable quadrature") {
  auto nsk = build_nsk2d();
  InitialData init;
  QuadratureOptions opts;
  opts.points_per_decade = 2;  // far too coarse for the doubling check
  opts.doubling_tol = 1e-6;
  CHECK_THROWS_AS(l2_decay(nsk.system, *nsk.symmetrizer, init, 0, {0.0, 1.0}, opts),
                  ResolutionError);
}

TEST_CASE("evolution contract errors") {
  auto heat = build_heat1d();
  auto sp = symmetrize(heat.system, *heat.symmetrizer,
                       FrequencyPoint::from_xi(Vector::Constant(1, 1.0)));
  CHECK_THROWS_AS(propagate_point(sp, CVector::Ones(1), -1.0), std::invalid_argument);
  InitialData init;
  CHECK_THROWS_AS(l2_decay(heat.system, *heat.symmetrizer, init, -1, {0.0}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(l2_decay(heat.system, *heat.symmetrizer, init, 0, {}, {}),
                  std::invalid_argument);
  // A non-positive margin function is a domain error for envelopes.
  EnvelopeSpec spec;
  spec.kind = EnvelopeSpec::Kind::RelaxationFree;
  spec.margin_fn = [](const FrequencyPoint&) { return 0.0; };
  CHECK_THROWS_AS(
      verify_envelope(heat.system, *heat.symmetrizer, spec, make_grid(1, 1.0, 2.0, 2, 2), {}),
      std::domain_error);
}
