#pragma once

#include <stdexcept>
#include <string>

namespace dissipa {

/// Eigenvector basis too ill-conditioned to build spectral projections.
class DefectiveMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cluster gap below the safe floor for the Drazin denominators.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fitted decay-type slopes too far from integers to classify.
class ClassificationError : public std::runtime_error {
 public:
  ClassificationError(const std::string& what, double low, double high)
      : std::runtime_error(what), low_slope(low), high_slope(high) {}
  double low_slope;
  double high_slope;
};

/// Eigenvalue branch continuation lost between two consecutive radii.
class TrackingError : public std::runtime_error {
 public:
  TrackingError(const std::string& what, double at_radius)
      : std::runtime_error(what), radius(at_radius) {}
  double radius;
};

/// Quadrature grid-doubling discrepancy above the error budget.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dissipa
