#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dissipa/coefficient_system.hpp"
#include "dissipa/frequency.hpp"
#include "dissipa/symbols.hpp"

namespace dissipa {

/// Frequency-indexed symmetric positive definite symmetrizer candidate S(xi).
struct SymmetrizerFn {
  std::function<Matrix(const FrequencyPoint&)> eval;
  std::string label;
  bool claims_friedrichs = false;  // S constant in xi
};

/// Identity symmetrizer (valid for systems whose symbols are already symmetric).
SymmetrizerFn identity_symmetrizer(int n);

struct SymmetrizerCheck {
  FrequencyPoint at;
  double s_asymmetry = 0.0;
  double s_min_eig = 0.0;
  double sa_asymmetry = 0.0;
  double sb_asymmetry = 0.0;
  double sb_min_eig = 0.0;
  double w_asymmetry = 0.0;  // S*A0, checked when mass != I
  bool pass = false;
  std::string reason;
};

struct SymmetrizerReport {
  std::vector<SymmetrizerCheck> checks;
  bool pass = false;
  double max_sa_asymmetry = 0.0;
  double max_sb_asymmetry = 0.0;
  double min_sb_eig = 0.0;
  std::optional<SymmetrizerCheck> first_failure;
};

/// Checks S = S^T > 0, S A(xi) symmetric, S B(xi) symmetric PSD on a grid
/// (and S A0 symmetric PD when the system has a non-identity mass).
SymmetrizerReport verify_symmetrizer(const CoefficientSystem& sys, const SymmetrizerFn& s,
                                     std::span<const FrequencyPoint> grid);

/// Symbols in the symmetrized variable V = (S A0)^{1/2} U:
/// A_S = W^{-1/2} S A W^{-1/2}, B_S = W^{-1/2} S B W^{-1/2}, W = S A0.
struct SymmetrizedPair {
  Matrix a_s;
  Matrix b_s;
  Matrix weight_sqrt;  // W^{1/2}
  FrequencyPoint at;
};

SymmetrizedPair symmetrize(const CoefficientSystem& sys, const SymmetrizerFn& s,
                           const FrequencyPoint& p);

struct CouplingTols {
  /// < 0 selects the roundoff-separation default 16 n eps ||B_S||. A fixed
  /// relative tolerance cannot work here: for regularity-loss systems the
  /// genuine margin theta~ decays like |xi|^-4 ||B_S|| while staying orders of
  /// magnitude above roundoff.
  double coupling_tol = -1.0;
  double cluster_rel_gap = 1e-6;
};

struct CouplingWitness {
  double mu = 0.0;  // eigenvalue of A_S
  Vector psi;       // unit vector in ker B_S with A_S psi ~ mu psi
};

struct CouplingVerdict {
  bool coupled = false;
  double theta_tilde = 0.0;  // lambda_min(sum_j P_j B_S P_j)
  std::optional<CouplingWitness> witness;
};

/// Genuine coupling test: no eigenvector of A_S may lie in ker B_S.
CouplingVerdict genuine_coupling(const Matrix& a_s, const Matrix& b_s,
                                 const CouplingTols& tols = {});
CouplingVerdict genuine_coupling(const SymmetrizedPair& sp, const CouplingTols& tols = {});

/// Pi_A(B) = sum_j P_j B P_j over the eigenprojections of symmetric A.
Matrix pi_projection(const Matrix& a, const Matrix& b, double rel_gap = 1e-6);

struct CompensatorResult {
  Matrix k_matrix;
  double theta = 0.0;          // lambda_min([K A]^s + B) in the checked coordinates
  double skew_residual = 0.0;  // ||K + K^T|| (or ||K W + (K W)^T|| in original coordinates)
  double identity_residual = 0.0;  // ||B - Pi_A(B) - (A K - K A)||, Drazin route only
  FrequencyPoint at;
};

struct DrazinTols {
  double cluster_rel_gap = 1e-6;
  double gap_floor_rel = 1e-8;  // floor = gap_floor_rel * (1 + spectral diameter)
};

/// K = sum_{i != j} P_i B P_j / (mu_i - mu_j) over cluster representatives.
/// Throws ConditioningError when two representatives are closer than the gap
/// floor, and verifies B = Pi_A(B) + (A K - K A) to 1e-8 * ||B||.
CompensatorResult drazin_compensator(const Matrix& a, const Matrix& b,
                                     const DrazinTols& tols = {});

/// Margin and skewness of a candidate K in symmetrized coordinates; never
/// fails, negative theta is simply reported.
CompensatorResult validate_compensator(const Matrix& k, const Matrix& a_s, const Matrix& b_s);

/// Same check in original coordinates for the triplet (S, A, B) with mass A0:
/// skewness of K S A0 and theta = lambda_min([K S A]^s + S B).
CompensatorResult validate_compensator(const Matrix& k, const Matrix& s, const Matrix& a0,
                                       const Matrix& a, const Matrix& b);

/// K = W^{1/2} K_S W^{-1/2}, W = S A0.
Matrix lift_compensator(const Matrix& k_s, const Matrix& s, const Matrix& a0);

/// Second-order relaxation systems: lift a direction-indexed compensator
/// K(omega) to a frequency-indexed K~(xi) = c (|xi|^2 phi1 + phi2) K(omega)
/// with a smoothstep partition {phi1, phi2} on the overlap (1, 1+eps), and the
/// guaranteed margin f(xi).
struct SecondOrderLift {
  std::function<Matrix(const FrequencyPoint&)> k_tilde;
  std::function<double(double)> margin;  // f as a function of |xi|
  double sigma_bar = 0.0;                // sphere-level margin
  double c = 0.0;
  bool verified = false;
  double worst_gap = 0.0;  // min over the grid of lambda_min(...) - f(|xi|)
};

SecondOrderLift second_order_lift(
    const std::function<Matrix(const Vector&)>& k_omega,
    const std::function<Matrix(const Vector&)>& a_omega,
    const std::function<Matrix(const Vector&)>& b_omega, const Matrix& relaxation,
    std::span<const Vector> directions, std::span<const double> radii, double c = -1.0,
    double eps = 0.1);

/// -3 |xi|^2 theta^2 / (4 |xi| ||K|| theta + 4 |xi|^2 theta + 4 ||K||^2 ||B||).
double spectral_bound_from_theta(double theta, double k_norm, double b_norm, double xi_norm);

// ---------------------------------------------------------------------------
// Symmetrizability obstruction certificates
// ---------------------------------------------------------------------------

enum class Feasibility { Feasible, Infeasible, Unknown };

std::string to_string(Feasibility f);

struct FeasibilityCertificate {
  Feasibility verdict = Feasibility::Unknown;
  std::string forced_constraints;  // human-readable description of the obstruction
  std::vector<std::pair<int, int>> forced_zero_entries;  // i <= j, forced s_ij = 0
  std::optional<Matrix> witness;                         // PD solution when feasible
  int null_space_dim = 0;
};

/// Constant (Friedrichs) symmetrizer: S = S^T with S L^alpha symmetric for
/// every coefficient. Infeasible only by a sound forced-degeneracy or
/// sign-contradiction argument; feasible carries a PD witness.
FeasibilityCertificate friedrichs_feasibility(const CoefficientSystem& sys,
                                              std::uint64_t seed = kDefaultSeed);

/// Same machinery for {S sym, S A(xi) sym, S B(xi) sym} at one frequency.
FeasibilityCertificate pointwise_symmetrizer_feasibility(const CoefficientSystem& sys,
                                                         const FrequencyPoint& p,
                                                         std::uint64_t seed = kDefaultSeed);

}  // namespace dissipa
