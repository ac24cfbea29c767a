#pragma once

#include <complex>

namespace qtr {

struct FaddeevaResult {
  std::complex<double> value;
  double est_rel_err;
};

// Faddeeva function w(z) = exp(-z^2) erfc(-iz), all complex z.
//
// For Im z >= 0 the function is bounded (|w| <= 1) and is evaluated directly:
// a 64-term rational approximation on |z| <= 9 and the Laplace continued
// fraction outside. Im z < 0 is routed through w(z) = 2 exp(-z^2) - w(-z),
// where the exponential carries the growth; the returned error estimate
// accounts for the cancellation in that subtraction.
FaddeevaResult faddeeva(std::complex<double> z);

// Convenience: e^{y^2} erfc(y), evaluated stably as w(iy).
inline FaddeevaResult erfcx_complex(std::complex<double> y) {
  return faddeeva(std::complex<double>(-y.imag(), y.real()));
}

}  // namespace qtr
