#include <doctest.h>

#include <algorithm>

#include "dissipa/denselin.hpp"
#include "dissipa/grid.hpp"
#include "dissipa/models.hpp"
#include "dissipa/structure.hpp"

using namespace dissipa;

namespace {

bool forced_contains(const FeasibilityCertificate& cert, int i, int j) {
  return std::find(cert.forced_zero_entries.begin(), cert.forced_zero_entries.end(),
                   std::make_pair(i, j)) != cert.forced_zero_entries.end();
}

}  // namespace

TEST_CASE("friedrichs: heat is feasible with a witness") {
  auto cert = friedrichs_feasibility(build_heat1d().system);
  CHECK(cert.verdict == Feasibility::Feasible);
  REQUIRE(cert.witness.has_value());
  CHECK(min_eig_sym(*cert.witness) > 0.0);
}

TEST_CASE("friedrichs: NSK 2D infeasible with forced s22 = s23 = s33 = 0") {
  auto cert = friedrichs_feasibility(build_nsk2d().system);
  CHECK(cert.verdict == Feasibility::Infeasible);
  CHECK(forced_contains(cert, 1, 1));
  CHECK(forced_contains(cert, 1, 2));
  CHECK(forced_contains(cert, 2, 2));
}

TEST_CASE("friedrichs: DNSF 3D feasible and the catalog constant symmetrizer is in the space") {
  auto bundle = build_dnsf(3);
  auto cert = friedrichs_feasibility(bundle.system);
  CHECK(cert.verdict == Feasibility::Feasible);
  REQUIRE(cert.witness.has_value());
  CHECK(min_eig_sym(*cert.witness) > 0.0);

  // diag((2/3) theta^2/rho^2, (2/3) theta I_3, 1) symmetrizes every coefficient.
  const Matrix s = bundle.symmetrizer->eval(FrequencyPoint::from_polar(1.0, Vector{{1.0, 0.0, 0.0}}));
  for (const auto& [alpha, mat] : bundle.system.coeffs())
    CHECK(asymmetry(Matrix(s * mat)) < 1e-12 * (1.0 + mat.norm()));
}

TEST_CASE("friedrichs: EFK-1D infeasible (no constant symmetrizer)") {
  auto cert = friedrichs_feasibility(build_efk1d().system);
  CHECK(cert.verdict == Feasibility::Infeasible);
}

TEST_CASE("pointwise: all-symmetric systems feasible with S = I in the space") {
  std::map<MultiIndex, Matrix> coeffs;
  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  coeffs[MultiIndex{1}] = a;
  coeffs[MultiIndex{2}] = -Matrix::Identity(2, 2);
  CoefficientSystem sys(2, 1, std::move(coeffs));
  auto cert = pointwise_symmetrizer_feasibility(sys, FrequencyPoint::from_xi(Vector::Constant(1, 1.5)));
  CHECK(cert.verdict == Feasibility::Feasible);
  REQUIRE(cert.witness.has_value());
  CHECK(min_eig_sym(*cert.witness) > 0.0);
}

TEST_CASE("pointwise: isentropic QHD feasible at any xi, catalog S verifies") {
  auto bundle = build_qhd_iso();
  for (double r : {0.3, 2.0, 50.0}) {
    auto p = FrequencyPoint::from_polar(r, Vector{{0.6, 0.0, 0.8}});
    auto cert = pointwise_symmetrizer_feasibility(bundle.system, p);
    CHECK(cert.verdict == Feasibility::Feasible);
    const Matrix s = bundle.symmetrizer->eval(p);
    const auto sp = assemble_symbols(bundle.system, p);
    CHECK(asymmetry(Matrix(s * sp.a_sym)) < 1e-10);
    CHECK(asymmetry(Matrix(s * sp.b_sym)) < 1e-10);
  }
}

TEST_CASE("pointwise: full QHD infeasible above a derived threshold radius") {
  auto bundle = build_qhd_full();
  const Vector omega = Vector{{1.0, 0.0, 0.0}};

  auto at = [&](double r) {
    return pointwise_symmetrizer_feasibility(bundle.system,
                                             FrequencyPoint::from_polar(r, omega));
  };
  CHECK(at(10.0).verdict == Feasibility::Infeasible);  // spec example value
  CHECK(at(1.0).verdict == Feasibility::Feasible);     // small radii admit a symmetrizer

  // Derive the threshold: smallest sampled radius after which every larger
  // sample is infeasible.
  const auto radii = log_radii(0.5, 100.0, 8);
  std::vector<Feasibility> verdicts;
  for (double r : radii) verdicts.push_back(at(r).verdict);
  int first_bad = -1;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (verdicts[i] == Feasibility::Infeasible) {
      first_bad = static_cast<int>(i);
      break;
    }
  }
  REQUIRE(first_bad > 0);
  const double threshold = radii[static_cast<std::size_t>(first_bad)];
  CHECK(threshold > 2.0);
  CHECK(threshold < 10.0);
  for (std::size_t i = static_cast<std::size_t>(first_bad); i < radii.size(); ++i)
    CHECK(verdicts[i] == Feasibility::Infeasible);
  // The obstruction is the sign contradiction, not failed sampling.
  auto cert = at(threshold);
  CHECK(cert.forced_constraints.find("opposite signs") != std::string::npos);

  // Direction independence of the verdicts.
  for (const auto& w : sphere_directions(3, 6))
    CHECK(pointwise_symmetrizer_feasibility(bundle.system, FrequencyPoint::from_polar(20.0, w))
              .verdict == Feasibility::Infeasible);
}

TEST_CASE("infeasible is never emitted from failed sampling alone") {
  // A system whose symmetrizers exist but are hard to hit by chance would be
  // 'unknown'; verify the three-valued scheme via a feasible case with a tiny
  // solution space and an infeasible case with a clean certificate.
  auto nsk = friedrichs_feasibility(build_nsk2d().system);
  CHECK(nsk.verdict == Feasibility::Infeasible);
  CHECK(!nsk.forced_constraints.empty());
  auto dnsf = friedrichs_feasibility(build_dnsf(1).system);
  CHECK(dnsf.verdict == Feasibility::Feasible);
}

TEST_CASE("pointwise: one-dimensional solution spaces are handled") {
  // S A sym forces s11 = s22; S B sym forces s12 = 0; the space is the line
  // through the identity (dimension 1), which is feasible.
  std::map<MultiIndex, Matrix> coeffs;
  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  coeffs[MultiIndex{1}] = a;
  coeffs[MultiIndex{2}] = -Matrix(Vector{{1.0, 2.0}}.asDiagonal());
  CoefficientSystem sys(2, 1, std::move(coeffs));
  auto cert =
      pointwise_symmetrizer_feasibility(sys, FrequencyPoint::from_xi(Vector::Constant(1, 2.0)));
  CHECK(cert.null_space_dim == 1);
  CHECK(cert.verdict == Feasibility::Feasible);
  REQUIRE(cert.witness.has_value());
  CHECK((*cert.witness - Matrix::Identity(2, 2) * (*cert.witness)(0, 0)).norm() < 1e-12);
}

TEST_CASE("pointwise: one-dimensional space with a sign contradiction") {
  // S A sym forces s22 = -s11 (A = diag(1,-1) conjugated so that the mixed
  // products flip the sign); built directly from the off-diagonal pattern
  // [[0,1],[-1,0]]: (S A)_{12} = -s11, (S A)_{21} = s22.
  std::map<MultiIndex, Matrix> coeffs;
  Matrix a(2, 2);
  a << 0, -1, 1, 0;
  coeffs[MultiIndex{1}] = a;
  coeffs[MultiIndex{2}] = -Matrix(Vector{{1.0, 2.0}}.asDiagonal());
  CoefficientSystem sys(2, 1, std::move(coeffs));
  auto cert =
      pointwise_symmetrizer_feasibility(sys, FrequencyPoint::from_xi(Vector::Constant(1, 1.0)));
  CHECK(cert.verdict == Feasibility::Infeasible);
  CHECK(cert.forced_constraints.find("opposite signs") != std::string::npos);
}
