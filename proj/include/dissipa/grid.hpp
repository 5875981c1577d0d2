#pragma once

#include <vector>

#include "dissipa/frequency.hpp"

namespace dissipa {

/// Product grid of unit directions and log-spaced radii.
/// d=1: directions {+1, -1}; d=2: uniform angles; d=3: Fibonacci sphere.
struct FrequencyGrid {
  std::vector<Vector> directions;
  std::vector<double> radii;               // strictly increasing
  std::vector<FrequencyPoint> points;      // direction-major, radius-minor

  int dim() const { return directions.empty() ? 0 : static_cast<int>(directions[0].size()); }
};

std::vector<Vector> sphere_directions(int d, int count);

/// radii = r_min * 10^(k / per_decade), k = 0..per_decade*decades (endpoints included).
std::vector<double> log_radii(double r_min, double r_max, int per_decade);

FrequencyGrid make_grid(int d, double r_min, double r_max, int per_decade, int n_directions);

/// Spec defaults: 64 directions (d=2) / 144 Fibonacci nodes (d=3), radii
/// 1e-3..1e3 at 16 per decade.
FrequencyGrid default_grid(int d);

int default_direction_count(int d);

}  // namespace dissipa
