#pragma once

#include <complex>

#include "constants.hpp"

namespace qtr {

// Repulsive delta barrier V(x) = b_s * delta(x).
struct DeltaPotential {
  double b_s;  // eV A
  double b;    // 1/A, b = m b_s / hbar^2 = b_s / (2 hbar^2/2m)

  static DeltaPotential from_strength(double b_s, const PhysicalConstants& pc);
};

// Stationary amplitudes: T = k/(k+ib), R = ib/(k+ib); T + R = 1.
std::complex<double> transmission_delta(double k, const DeltaPotential& pot);
std::complex<double> reflection_delta(double k, const DeltaPotential& pot);

// Transmitted wave for x > 0 from the absorbing cut-off initial wave:
//   psi = T(k) M(x,k,t) + R(k) M(x,-ib,t).
// The second kernel sits on the antibound pole k = -ib of the S matrix.
std::complex<double> psi_delta(double x, double k, double t, const DeltaPotential& pot,
                               const PhysicalConstants& pc);

}  // namespace qtr
