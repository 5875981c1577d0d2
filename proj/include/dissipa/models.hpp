#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dissipa/structure.hpp"

namespace dissipa {

struct ModelExpectations {
  std::optional<bool> coupled;
  std::optional<std::pair<int, int>> type;  // (p, q)
  Feasibility friedrichs = Feasibility::Unknown;
};

struct ModelBundle {
  std::string name;
  CoefficientSystem system;
  std::optional<SymmetrizerFn> symmetrizer;
  /// Reference compensator in symmetrized coordinates for the triplet used by
  /// sweep theta (B_S/|xi|^2 for relaxation-free systems, B_S otherwise).
  std::function<Matrix(const FrequencyPoint&)> reference_compensator;
  ModelExpectations expected;
};

// --- Isothermal Navier-Stokes-Korteweg, d = 2, state (rho, u1, u2) ---------
struct NskParams {
  double rho = 1.0;
  double p_rho = 1.0;
  double capillarity = 1.0;  // k
  double nu = 1.0;
  double lambda_visc = 1.0;
  Vector u = Vector::Zero(2);
};
ModelBundle build_nsk2d(const NskParams& params = {});

// --- Navier-Stokes-Fourier-Korteweg, d = 3, state (rho, u, theta) ----------
struct NsfkParams {
  double rho = 1.0;
  double theta = 1.0;
  double p_rho = 1.0;
  double p_theta = 1.0;
  double e_theta = 1.0;
  double nu = 1.0;
  double lambda_visc = 1.0;
  double capillarity = 1.0;
  double alpha = 1.0;  // heat conductivity
  double inspection_delta = 0.1;
  Vector u = Vector::Zero(3);
};
ModelBundle build_nsfk3d(const NsfkParams& params = {});

// --- Euler-Fourier-Korteweg (inviscid NSFK), state (rho, u, theta) ---------
struct EfkParams {
  double rho = 1.0;
  double theta = 1.0;
  double p_rho = 1.0;
  double p_theta = 1.0;
  double e_theta = 1.0;
  double capillarity = 1.0;
  double alpha = 1.0;
  Vector u;  // resized to the dimension at build
};
ModelBundle build_efk1d(const EfkParams& params = {});
ModelBundle build_efk_md(int d, const EfkParams& params = {});

// --- Dispersive Navier-Stokes-Fourier (Levermore-Sun), d in {1,3} ----------
struct DnsfParams {
  double rho = 1.0;
  double theta = 1.0;
  double mu = 1.0;
  double alpha = 1.0;
  double tau4 = 1.0;  // tau1 = 2 tau4 / theta by the kinetic relation
  double inspection_delta = 0.05;
  Vector u;  // resized to the dimension at build
};
ModelBundle build_dnsf(int d, const DnsfParams& params = {});

// --- Isentropic quantum hydrodynamics, d = 3, state (n, v) -----------------
struct QhdIsoParams {
  double n = 1.0;
  double p_n = 1.0;     // p'(n)
  double mu_int = 1.0;  // interaction constant
  double eps = 1.0;     // scaled Planck constant
  double tau = 1.0;     // momentum relaxation time
};
ModelBundle build_qhd_iso(const QhdIsoParams& params = {});

// --- Full quantum hydrodynamics with energy exchange, d = 3 ----------------
struct QhdFullParams {
  double n = 1.0;
  double theta0 = 1.0;  // lattice temperature; equilibrium g = 3 theta0 / 2
  double hbar = 1.0;
  double kappa = 1.0;
  double tau_p = 1.0;
  double tau_w = 1.0;
};
ModelBundle build_qhd_full(const QhdFullParams& params = {});

// --- 1-D heat equation demo -------------------------------------------------
ModelBundle build_heat1d(double diffusivity = 1.0);

/// Names accepted by the CLI.
std::vector<std::string> model_names();

/// Build by CLI name with flat "key value" parameter overrides
/// (e.g. {"rho", "2.0"}). Throws std::invalid_argument for unknown names/keys.
ModelBundle build_by_name(const std::string& name,
                          const std::map<std::string, double>& overrides = {});

}  // namespace dissipa
