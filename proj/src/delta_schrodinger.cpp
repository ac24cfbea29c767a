#include "delta_schrodinger.hpp"

#include <cmath>
#include <stdexcept>

#include "moshinsky.hpp"

namespace qtr {

using cplx = std::complex<double>;

DeltaPotential DeltaPotential::from_strength(double b_s, const PhysicalConstants& pc) {
  if (!std::isfinite(b_s) || b_s < 0.0)
    throw std::invalid_argument("DeltaPotential: strength must be >= 0 (repulsive barrier)");
  return DeltaPotential{b_s, b_s / (2.0 * pc.hbar2_over_2m)};
}

cplx transmission_delta(double k, const DeltaPotential& pot) {
  if (!(k > 0.0)) throw std::invalid_argument("transmission_delta: k must be > 0");
  return k / cplx(k, pot.b);
}

cplx reflection_delta(double k, const DeltaPotential& pot) {
  if (!(k > 0.0)) throw std::invalid_argument("reflection_delta: k must be > 0");
  return cplx(0.0, pot.b) / cplx(k, pot.b);
}

cplx psi_delta(double x, double k, double t, const DeltaPotential& pot,
               const PhysicalConstants& pc) {
  if (!(x > 0.0)) throw std::invalid_argument("psi_delta: x must be > 0");
  const cplx tk = transmission_delta(k, pot);
  const cplx rk = reflection_delta(k, pot);
  return tk * moshinsky_m(x, cplx(k, 0.0), t, pc) +
         rk * moshinsky_m(x, cplx(0.0, -pot.b), t, pc);
}

}  // namespace qtr
