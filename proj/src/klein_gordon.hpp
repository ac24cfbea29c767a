#pragma once

#include <complex>

#include "constants.hpp"

namespace qtr {

// Hyperbolic coordinates of the Bessel series, defined for ct > x:
//   xi = sqrt((ct+x)/(ct-x)),  eta = mu sqrt(c^2 t^2 - x^2),  z = (q + E_q)/mu.
struct KgSeriesParams {
  double xi;
  double eta;
  std::complex<double> z;
};

struct KgSeriesDiag {
  long terms = 0;          // series terms actually summed
  double tail_bound = 0.0; // bound on the dropped tail, absolute
};

struct KgOptions {
  double tol = 1e-14;   // relative tail target
  long max_terms = -1;  // override the automatic truncation order (tests only)
};

// Transmitted free relativistic shutter wave psi_r0(x, q, t) for x > 0.
// Exactly zero (bit-exact, no series work) for ct <= x. q is either real
// (+-k_r) or -i b0 with 0 < b0 < mu (E_q = sqrt(mu^2 - b0^2)).
//
// The printed form of the solution,
//   e^{i(qx - E_q ct)} + J_0(eta)/2 - sum_{n>=0} [xi/(iz)]^n J_n(eta),
// has a geometric factor that grows ahead of the classical front (xi > |z|)
// and there loses ~ mu*x / ln 10 digits to cancellation. The generating
// function sum_{n=-inf}^{inf} v^n J_n(eta) = exp[(eta/2)(v - 1/v)] with
// v = xi/(iz) turns it into the equivalent convergent-side series
//   psi = J_0(eta)/2 + sum_{n>=1} (-iz/xi)^n J_n(eta),
// because exp[(eta/2)(v - 1/v)] is exactly the plane-wave term. The evaluator
// picks whichever side has ratio < 1, so every term is bounded by |J_n| and
// the sum is cancellation-free on both sides of the classical front.
std::complex<double> kg_free(double x, const Kinematics& kin, double t,
                             const PhysicalConstants& pc,
                             std::complex<double> effective_q,
                             const KgOptions& opt = {}, KgSeriesDiag* diag = nullptr);
std::complex<double> kg_free(double x, const Kinematics& kin, double t,
                             const PhysicalConstants& pc);

// Initial wave e^{i k_r x} + e^{i alpha} e^{-i k_r x}:
//   psi = kg_free(q=k_r) + e^{i alpha} kg_free(q=-k_r); alpha = pi starts
// smoothly from zero at the light front.
std::complex<double> kg_free_phase(double x, const Kinematics& kin, double t, double alpha,
                                   const PhysicalConstants& pc, const KgOptions& opt = {});

// Delta barrier b_r delta(x) with b0 = b_r/2 < mu.
struct KgDeltaCoefficients {
  double b0;   // 1/A
  double eps;  // sqrt(mu^2 - b0^2), 1/A
  std::complex<double> a, b, c, d;

  static KgDeltaCoefficients make(double b0, const Kinematics& kin,
                                  const PhysicalConstants& pc);
};

// psi = A psi0(k_r) + B C psi0(-i b0) + B D conj(psi0(-i b0)); exactly zero
// for ct <= x. Long-time limit A e^{i(k_r x - E_r c t)}.
std::complex<double> kg_delta(double x, const Kinematics& kin, double t,
                              const KgDeltaCoefficients& coeffs, const PhysicalConstants& pc,
                              const KgOptions& opt = {});

// Series coordinates for ct > x (diagnostics and tests).
KgSeriesParams kg_series_params(double x, double t, std::complex<double> q,
                                const PhysicalConstants& pc);

}  // namespace qtr
