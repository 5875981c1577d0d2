#pragma once

#include "dissipa/types.hpp"

namespace dissipa {

/// Nonzero frequency xi in R^d with its polar form cached.
struct FrequencyPoint {
  Vector xi;
  double radius = 0.0;  // |xi| > 0
  Vector direction;     // xi / |xi|

  static FrequencyPoint from_xi(const Vector& xi);
  static FrequencyPoint from_polar(double radius, const Vector& direction);

  int dim() const { return static_cast<int>(xi.size()); }
};

}  // namespace dissipa
