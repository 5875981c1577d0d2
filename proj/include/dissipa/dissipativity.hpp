#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "dissipa/grid.hpp"
#include "dissipa/structure.hpp"

namespace dissipa {

struct SweepRecord {
  FrequencyPoint at;
  CVector eigenvalues;
  double max_re = 0.0;
  std::optional<double> theta;  // compensator margin, when computed
  bool ok = true;
  std::string message;
};

enum class CompensatorStrategy {
  None,               // do not populate theta
  Drazin,             // Drazin formula on the symmetrized pair
  Reference,          // supplied reference function only
  DrazinOrReference,  // Drazin, falling back to the reference if it refuses
};

struct SweepOptions {
  CompensatorStrategy strategy = CompensatorStrategy::None;
  /// Reference compensator in symmetrized coordinates for the same triplet
  /// used for theta (barred when the system has no relaxation block).
  std::function<Matrix(const FrequencyPoint&)> reference;
  double cluster_rel_gap = 1e-6;
  int threads = 0;  // 0 = DISSIPA_THREADS env or 1
};

/// One record per grid point. theta is the compensator margin of
/// (I, A_S, B_S) when the system has a relaxation block, else of
/// (I, A_S, B_S/|xi|^2). Per-point failures are recorded, never thrown.
std::vector<SweepRecord> sweep(const CoefficientSystem& sys,
                               const std::optional<SymmetrizerFn>& s, const FrequencyGrid& grid,
                               const SweepOptions& opts = {});

struct StrictVerdict {
  bool pass = false;
  SweepRecord worst;  // record closest to violating the profile bound
};

/// pass iff max_re < -tol * |xi|^2/(1+|xi|^2)^2 at every record.
StrictVerdict certify_strict(const std::vector<SweepRecord>& records, double tol);

enum class DecayKind { RegularityGain, Standard, RegularityLoss };

std::string to_string(DecayKind k);

struct DecayClassification {
  int p = 0;
  int q = 0;
  double c_fit = 0.0;
  double low_slope = 0.0;
  double high_slope = 0.0;
  DecayKind kind = DecayKind::Standard;
};

/// Fits log(-max_re envelope) vs log|xi| on the extreme decades; the slopes
/// are 2p (low) and 2(p-q) (high). Throws ClassificationError when a slope is
/// more than 0.25 from an even integer, std::invalid_argument when the grid
/// spans fewer than 4 decades at 10 points per decade or some max_re >= 0.
DecayClassification classify_type(const std::vector<SweepRecord>& records);

struct BranchFit {
  CVector lambda;                         // eigenvalue along the radii
  std::map<int, Complex> coefficients;    // order -> fitted coefficient of (i xi)^order
  double residual = 0.0;                  // relative least-squares residual
};

struct AsymptoticFit {
  std::vector<double> radii;
  std::vector<BranchFit> branches;
};

/// 1-D high-frequency expansion: least-squares fit of each eigenvalue branch
/// lambda(i xi) against {(i xi)^n : n in orders}, branches tracked by
/// nearest-neighbor continuation. direction is +1 or -1.
AsymptoticFit asymptotic_fit(const CoefficientSystem& sys, int direction,
                             const std::vector<int>& orders, const std::vector<double>& radii);

/// Max projection jump between adjacent radii along one direction; a
/// smoothness diagnostic for the eigenprojections of A_S (not a proof).
double projection_jump_diagnostic(const CoefficientSystem& sys, const SymmetrizerFn& s,
                                  const Vector& direction, const std::vector<double>& radii,
                                  double rel_gap = 1e-6);

}  // namespace dissipa
