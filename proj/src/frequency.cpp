#include "dissipa/frequency.hpp"

#include <stdexcept>

namespace dissipa {

FrequencyPoint FrequencyPoint::from_xi(const Vector& xi) {
  const double r = xi.norm();
  if (!(r > 0.0)) throw std::domain_error("FrequencyPoint: xi = 0 has no direction");
  return FrequencyPoint{xi, r, xi / r};
}

FrequencyPoint FrequencyPoint::from_polar(double radius, const Vector& direction) {
  if (!(radius > 0.0)) throw std::domain_error("FrequencyPoint: radius must be positive");
  const double dn = direction.norm();
  if (std::abs(dn - 1.0) > 1e-12)
    throw std::domain_error("FrequencyPoint: direction must be a unit vector");
  Vector omega = direction / dn;
  return FrequencyPoint{radius * omega, radius, omega};
}

}  // namespace dissipa
