#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "constants.hpp"

namespace qtr {

struct SquareBarrier {
  double v0;     // eV, > 0
  double width;  // A, > 0
};

struct ResonancePole {
  std::complex<double> k;      // 1/A
  std::complex<double> u0uL;   // u_n(0) u_n(L) under the adopted normalization
  int index;                   // 1-based
  double residual;             // relative pole-condition residual
};

// Stationary transmission/reflection amplitudes with the e^{ikx} transmitted
// convention (long-time limit T(k) e^{i(kx - Et/hbar)}). Continuous through
// E = V0 (the kappa -> 0 singularity is removable).
std::complex<double> transmission_square(double k, const SquareBarrier& bar,
                                         const PhysicalConstants& pc);
std::complex<double> reflection_square(double k, const SquareBarrier& bar,
                                       const PhysicalConstants& pc);

// Fourth-quadrant S-matrix poles k_1..k_{n_max}, |k| strictly increasing,
// found by damped complex Newton from barrier-top seeds kappa L ~ n pi.
// Third-quadrant companions are -conj(k_n) by symmetry and are not stored.
std::vector<ResonancePole> find_poles(const SquareBarrier& bar, int n_max,
                                      const PhysicalConstants& pc);

// Poles on the negative imaginary axis (antibound / virtual states). Thick
// barriers have none; in the thin-barrier limit one appears near -i b with
// b = m V0 L / hbar^2 and carries the delta-barrier reflection transient.
std::vector<ResonancePole> find_antibound(const SquareBarrier& bar,
                                          const PhysicalConstants& pc);

// Relative residual of the outgoing-wave pole condition at complex k.
double pole_condition_residual(const SquareBarrier& bar, std::complex<double> k,
                               const PhysicalConstants& pc);

// Boundary values (u(0), u(L)) of the outgoing-wave eigenfunction at a pole,
// normalized by  int_0^L u^2 dx + i [u^2(0) + u^2(L)] / (2 k_n) = 1.
// Throws if the input does not satisfy the pole condition.
std::pair<std::complex<double>, std::complex<double>> resonant_state_data(
    const SquareBarrier& bar, std::complex<double> pole, const PhysicalConstants& pc);

// Precomputed immutable pole data for the transient expansion.
struct PoleTable {
  SquareBarrier barrier;
  PhysicalConstants consts;
  std::vector<ResonancePole> poles;      // fourth quadrant
  std::vector<ResonancePole> antibound;  // on the negative imaginary axis
};

PoleTable make_pole_table(const SquareBarrier& bar, int n_max, const PhysicalConstants& pc);

enum class ShutterKind { absorbing, reflecting };

struct BarrierEval {
  std::complex<double> psi;
  double truncation;  // magnitude of the last retained pole-term group
};

// Transmitted wave for x >= L:
//   absorbing:  T(k) M(x,k,t) - i sum_n T_n M(x,k_n,t),
//               T_n = u_n(0) u_n(L) e^{-i k_n L} / (k - k_n)
//   reflecting: T(k) M(x,k,t) - T(-k) M(x,-k,t) - 2ik sum_n T_n M(x,k_n,t),
//               T_n = u_n(0) u_n(L) e^{-i k_n L} / (k^2 - k_n^2)
// The sum runs over the fourth-quadrant poles (first n_poles of the table),
// their third-quadrant mirrors, and any antibound poles.
BarrierEval psi_barrier(double x, double k, double t, const PoleTable& table, int n_poles,
                        ShutterKind kind);

}  // namespace qtr
