#pragma once

#include <complex>

#include "constants.hpp"

namespace qtr {

struct MoshinskyArgs {
  double x;                // A, >= 0
  std::complex<double> q;  // 1/A, Im q <= 0
  double t;                // fs, >= 0
  PhysicalConstants consts;
};

// Transient propagation kernel
//   M(x,q,t) = (1/2) exp(i m x^2 / (2 hbar t)) e^{y^2} erfc(y),
//   y = e^{-i pi/4} sqrt(m/(2 hbar t)) (x - hbar q t / m),
// with e^{y^2} erfc(y) evaluated as w(iy). At t = 0 the kernel takes its
// initial value: 0 for x > 0, 1/2 at x = 0.
//
// q may be real (either sign) or in the lower half-plane; Im q > 0 is
// rejected (no use here and exponentially growing).
std::complex<double> moshinsky_m(const MoshinskyArgs& args);
std::complex<double> moshinsky_m(double x, std::complex<double> q, double t,
                                 const PhysicalConstants& pc);

// Free shutter solutions. Absorbing initial wave: psi = M(x,k,t).
std::complex<double> free_absorbing(double x, double k, double t, const PhysicalConstants& pc);

// Initial wave e^{ikx} + e^{i alpha} e^{-ikx} on x < 0:
//   psi = M(x,k,t) + e^{i alpha} M(x,-k,t); alpha = pi is the reflecting shutter.
std::complex<double> free_phase(double x, double k, double t, double alpha,
                                const PhysicalConstants& pc);

}  // namespace qtr
