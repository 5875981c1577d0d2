#include "dissipa/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dissipa {

namespace {

// cos/sin at multiples of pi/2 leave ~1e-17 residue; snap so that cardinal
// directions have exactly-zero components (phantom symbol contributions of
// size residue^2 otherwise leak into the even-order part).
Vector snapped(Vector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) < 1e-14) v[i] = 0.0;
  return v / v.norm();
}

}  // namespace

std::vector<Vector> sphere_directions(int d, int count) {
  std::vector<Vector> dirs;
  if (d == 1) {
    dirs.push_back(Vector::Constant(1, 1.0));
    dirs.push_back(Vector::Constant(1, -1.0));
    return dirs;
  }
  if (count < 1) throw std::invalid_argument("sphere_directions: count >= 1 required");
  if (d == 2) {
    dirs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / count;
      Vector v(2);
      v << std::cos(phi), std::sin(phi);
      dirs.push_back(snapped(std::move(v)));
    }
    return dirs;
  }
  if (d == 3) {
    // Fibonacci sphere nodes.
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    dirs.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = 2.0 * std::numbers::pi * k / golden;
      Vector v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      dirs.push_back(snapped(std::move(v)));
    }
    return dirs;
  }
  throw std::invalid_argument("sphere_directions: d in {1,2,3} supported");
}

std::vector<double> log_radii(double r_min, double r_max, int per_decade) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument("log_radii: 0 < r_min < r_max required");
  if (per_decade < 1) throw std::invalid_argument("log_radii: per_decade >= 1 required");
  const double lo = std::log10(r_min);
  const double hi = std::log10(r_max);
  const int steps = static_cast<int>(std::llround((hi - lo) * per_decade));
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(steps + 1));
  for (int k = 0; k <= steps; ++k)
    radii.push_back(std::pow(10.0, lo + (hi - lo) * k / std::max(steps, 1)));
  radii.back() = r_max;
  radii.front() = r_min;
  return radii;
}

FrequencyGrid make_grid(int d, double r_min, double r_max, int per_decade, int n_directions) {
  FrequencyGrid g;
  g.directions = sphere_directions(d, n_directions);
  g.radii = log_radii(r_min, r_max, per_decade);
  g.points.reserve(g.directions.size() * g.radii.size());
  for (const Vector& omega : g.directions)
    for (double r : g.radii) g.points.push_back(FrequencyPoint::from_polar(r, omega));
  return g;
}

int default_direction_count(int d) {
  switch (d) {
    case 1: return 2;
    case 2: return 64;
    default: return 144;
  }
}

FrequencyGrid default_grid(int d) {
  return make_grid(d, 1e-3, 1e3, 16, default_direction_count(d));
}

}  // namespace dissipa
