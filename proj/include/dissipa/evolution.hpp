#pragma once

#include <functional>
#include <vector>

#include "dissipa/dissipativity.hpp"

namespace dissipa {

/// V(xi, t) = exp(-t (i|xi| A_S + B_S)) v0.
CVector propagate_point(const Matrix& a_s, const Matrix& b_s, double radius, const CVector& v0,
                        double t);
CVector propagate_point(const SymmetrizedPair& sp, const CVector& v0, double t);

struct EnvelopeSpec {
  enum class Kind { Full, RelaxationFree } kind = Kind::Full;
  /// f(xi) (full) or g(xi) (relaxation-free); must be positive on the grid.
  std::function<double(const FrequencyPoint&)> margin_fn;

  /// rate(xi) = |xi|^2 f/(1+|xi|^2) (full) or |xi|^2 g (relaxation-free).
  double rate(const FrequencyPoint& p) const;
};

struct EnvelopeReport {
  double c_fit = 0.0;  // smallest admissible C for the fitted k
  double k_fit = 0.0;  // largest decay factor supported by the samples
  int violations = 0;
  int samples = 0;
  double worst_excess = 0.0;  // max of |V|/|v0| - C exp(-k rate t) over samples
};

struct EnvelopeOptions {
  std::vector<double> depth_levels = {0.5, 1.0, 2.0, 4.0, 8.0};  // x = rate(xi) * t
  int vectors_per_point = 3;
  std::uint64_t seed = kDefaultSeed;
  /// When set, check these constants instead of fitting.
  std::optional<double> assert_c;
  std::optional<double> assert_k;
};

/// Checks |V(xi,t)| <= C exp(-k rate(xi) t) |v0| over the grid, per-frequency
/// times at the given envelope depths, and random unit initial vectors.
EnvelopeReport verify_envelope(const CoefficientSystem& sys, const SymmetrizerFn& s,
                               const EnvelopeSpec& spec, const FrequencyGrid& grid,
                               const EnvelopeOptions& opts = {});

struct InitialData {
  enum class Profile { Gaussian, CompactBump, InversePoly } profile = Profile::Gaussian;
  double amplitude = 1.0;
  double width = 1.0;
  Vector component_weights;  // empty = equal weights

  double radial(double r) const;
};

struct QuadratureOptions {
  double r_min = 1e-4;
  double r_max = 16.0;
  int points_per_decade = 24;
  int directions = 0;        // 0 = 1 (d=1), 16 (d=2), 32 (d=3)
  double doubling_tol = 0.01;  // grid-doubling relative error budget
  int weighted_component = 0;  // (1+|xi|^2) weight on this component; -1 = none
};

struct DecaySeries {
  std::vector<double> times;
  std::vector<double> norms;          // ||D^ell U(t)|| surrogate
  std::vector<double> running_rate;   // slope of log norm vs log(1+t), consecutive
  double fitted_rate = 0.0;           // OLS on the last decade of times
  double l1_surrogate = 0.0;          // sup over grid of |U0(xi)|
  double doubling_error = 0.0;
};

/// Frequency-space Plancherel surrogate of ||D^ell U(t)||_{L^2} with the
/// (1+|xi|^2) weight on the density component, by tensor quadrature in
/// log-radius x angle. Throws ResolutionError when grid doubling moves the
/// result more than doubling_tol.
DecaySeries l2_decay(const CoefficientSystem& sys, const SymmetrizerFn& s,
                     const InitialData& init, int ell, const std::vector<double>& times,
                     const QuadratureOptions& opts = {});

}  // namespace dissipa
