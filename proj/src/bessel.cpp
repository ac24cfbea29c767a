#include "bessel.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtr {
namespace {

// Start order for the downward recurrence: above both the requested order and
// the turning point n ~ x, plus a margin that keeps the contamination of the
// minimal solution below ~1e-21 (Airy-regime separation exp(-2*(2/3)*s^{3/2})
// with s = 2^{1/3} * margin / x^{1/3}).
std::int64_t start_order(int n_keep, double x) {
  const double margin = std::max(30.0, std::ceil(14.0 * std::cbrt(std::max(x, 1.0))));
  return static_cast<std::int64_t>(std::max(static_cast<double>(n_keep), std::ceil(x)) + margin);
}

}  // namespace

double bessel_j_prefix(int n_keep, double x, double* out) {
  if (n_keep < 0) throw std::invalid_argument("bessel_j_prefix: n_keep must be >= 0");
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument("bessel_j_prefix: x must be finite and >= 0, got " +
                                std::to_string(x));
  if (x == 0.0) {
    out[0] = 1.0;
    for (int n = 1; n <= n_keep; ++n) out[n] = 0.0;
    return 0.0;
  }

  const std::int64_t n_start = start_order(n_keep, x);
  const double inv_x = 1.0 / x;
  double jp = 0.0;       // J_{n+1} carrier
  double jc = 1e-280;    // J_n carrier (arbitrary scale, fixed by normalization)
  double norm = 0.0;     // J_0 + 2 sum J_{2k}, same scale
  for (std::int64_t n = n_start; n >= 0; --n) {
    if (n <= n_keep) out[n] = jc;
    if ((n & 1) == 0) norm += (n == 0) ? jc : 2.0 * jc;
    const double jm = (2.0 * (n)) * inv_x * jc - jp;
    jp = jc;
    jc = jm;
    if (std::abs(jc) > 1e280) {  // rescale everything carried so far
      constexpr double s = 1e-280;
      jc *= s;
      jp *= s;
      norm *= s;
      for (int m = static_cast<int>(std::min<std::int64_t>(n, n_keep)); m <= n_keep; ++m)
        out[m] *= s;
    }
  }
  const double scale = 1.0 / norm;
  for (int n = 0; n <= n_keep; ++n) out[n] *= scale;
  // rounding accumulates incoherently along the recurrence
  return 1e-15 * std::sqrt(static_cast<double>(n_start) + 1.0) + 1e-15;
}

BesselSeqResult bessel_j_seq(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("bessel_j_seq: n_max must be >= 0");
  BesselSeqResult r;
  r.values.resize(static_cast<std::size_t>(n_max) + 1);
  r.est_abs_err = bessel_j_prefix(n_max, x, r.values.data());
  return r;
}

}  // namespace qtr
