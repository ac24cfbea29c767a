#include "constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtr {

PhysicalConstants default_constants() {
  // hbar2_over_2m = (hbar c)^2 / (2 m c^2) and mu = m c^2 / (hbar c),
  // from hbar c = 1973.269804 eV A and m_e c^2 = 510998.95 eV.
  return PhysicalConstants{
      0.6582119569,        // eV fs
      3.8099821138362402,  // eV A^2
      2997.92458,          // A/fs
      258.96050756169177,  // 1/A
  };
}

PhysicalConstants natural_units() { return PhysicalConstants{1.0, 0.5, 1.0, 1.0}; }

void validate(const PhysicalConstants& pc) {
  if (!(pc.hbar > 0.0) || !(pc.hbar2_over_2m > 0.0) || !(pc.c > 0.0) || !(pc.mu > 0.0))
    throw std::invalid_argument("PhysicalConstants: all fields must be positive");
  // mc^2 both as hbar*c*mu and as 2*(hbar^2/2m)*mu^2
  const double rest1 = pc.hbar * pc.c * pc.mu;
  const double rest2 = 2.0 * pc.hbar2_over_2m * pc.mu * pc.mu;
  if (std::abs(rest1 - rest2) > 1e-9 * rest1)
    throw std::invalid_argument("PhysicalConstants: mc^2 = hbar*c*mu inconsistent with hbar^2/2m");
}

Kinematics kinematics_from_energy(double energy, const PhysicalConstants& pc) {
  if (!std::isfinite(energy) || energy <= 0.0)
    throw std::invalid_argument("kinematics_from_energy: energy must be positive, got " +
                                std::to_string(energy));
  const double k = std::sqrt(energy / pc.hbar2_over_2m);
  if (k >= pc.mu)
    throw std::domain_error("kinematics_from_energy: k >= mu, relativistic mapping undefined");
  const double ratio = k / pc.mu;
  const double k_r = k / std::sqrt((1.0 - ratio) * (1.0 + ratio));
  const double e_r = std::hypot(k_r, pc.mu);
  return Kinematics{energy, k, k_r, e_r};
}

}  // namespace qtr
