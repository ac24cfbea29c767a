#include "moshinsky.hpp"

#include <cmath>
#include <stdexcept>

#include "faddeeva.hpp"

namespace qtr {

using cplx = std::complex<double>;

cplx moshinsky_m(double x, cplx q, double t, const PhysicalConstants& pc) {
  if (!std::isfinite(x) || !std::isfinite(t) || !std::isfinite(q.real()) ||
      !std::isfinite(q.imag()))
    throw std::invalid_argument("moshinsky_m: non-finite argument");
  if (x < 0.0) throw std::invalid_argument("moshinsky_m: x must be >= 0");
  if (t < 0.0) throw std::invalid_argument("moshinsky_m: t must be >= 0");
  if (q.imag() > 0.0)
    throw std::domain_error("moshinsky_m: Im q > 0 is outside the validated branch");
  if (t == 0.0) return (x > 0.0) ? cplx(0.0, 0.0) : cplx(0.5, 0.0);

  // m/(2 hbar) = hbar / (4 hbar^2/2m); hbar/m = 2 (hbar^2/2m) / hbar
  const double m_over_2h = pc.hbar / (4.0 * pc.hbar2_over_2m);
  const double s = std::sqrt(m_over_2h / t);  // sqrt(m / (2 hbar t)), positive root
  const cplx drift = x - (2.0 * pc.hbar2_over_2m / pc.hbar) * q * t;
  constexpr cplx exp_m_i_pi4(0.7071067811865476, -0.7071067811865476);
  const cplx y = exp_m_i_pi4 * s * drift;

  // w(iy) = e^{y^2} erfc(y)
  const cplx w = erfcx_complex(y).value;
  const double phase = m_over_2h * x * x / t;
  return 0.5 * cplx(std::cos(phase), std::sin(phase)) * w;
}

cplx moshinsky_m(const MoshinskyArgs& a) { return moshinsky_m(a.x, a.q, a.t, a.consts); }

cplx free_absorbing(double x, double k, double t, const PhysicalConstants& pc) {
  if (!(k > 0.0)) throw std::invalid_argument("free_absorbing: k must be > 0");
  return moshinsky_m(x, cplx(k, 0.0), t, pc);
}

cplx free_phase(double x, double k, double t, double alpha, const PhysicalConstants& pc) {
  if (!(k > 0.0)) throw std::invalid_argument("free_phase: k must be > 0");
  const cplx phase(std::cos(alpha), std::sin(alpha));
  return moshinsky_m(x, cplx(k, 0.0), t, pc) + phase * moshinsky_m(x, cplx(-k, 0.0), t, pc);
}

}  // namespace qtr
