#include "doctest.h"

#include <cmath>
#include <complex>

#include "barrier_resonances.hpp"
#include "delta_schrodinger.hpp"

#include "scalar_ref.inc"

using namespace qtr;
using cplx = std::complex<double>;

namespace {
const SquareBarrier kBar{1.0, 5.0};  // eV, A
}

TEST_CASE("stationary amplitudes: limits and unitarity") {
  const PhysicalConstants pc = default_constants();

  // vanishing barrier transmits everything
  CHECK(std::abs(transmission_square(0.4, {1e-14, 5.0}, pc) - 1.0) < 1e-8);

  // |T|^2 + |R|^2 = 1 above and below the barrier top
  for (const double k : {0.05, 0.2, 0.5124, 0.9, 3.0}) {
    const double t2 = std::norm(transmission_square(k, kBar, pc));
    const double r2 = std::norm(reflection_square(k, kBar, pc));
    CHECK(t2 + r2 == doctest::Approx(1.0).epsilon(1e-12));
  }

  // continuity through E = V0 (kappa = 0 is removable)
  const double k_top = std::sqrt(kBar.v0 / pc.hbar2_over_2m);
  const cplx t_mid = transmission_square(k_top, kBar, pc);
  const cplx t_lo = transmission_square(k_top * (1.0 - 1e-7), kBar, pc);
  const cplx t_hi = transmission_square(k_top * (1.0 + 1e-7), kBar, pc);
  CHECK(std::abs(t_mid - t_lo) < 1e-6 * std::abs(t_mid));
  CHECK(std::abs(t_mid - t_hi) < 1e-6 * std::abs(t_mid));
  CHECK(std::abs(t_mid - 0.5 * (t_lo + t_hi)) < 1e-8);

  CHECK_THROWS_AS((void)transmission_square(0.0, kBar, pc), std::invalid_argument);
  CHECK_THROWS_AS((void)transmission_square(0.3, {-1.0, 5.0}, pc), std::invalid_argument);
}

TEST_CASE("pole table matches the independent root finder") {
  const PhysicalConstants pc = default_constants();
  const auto poles = find_poles(kBar, 3, pc);
  REQUIRE(poles.size() == 3);
  const cplx ref[3] = {{kRefPole1_re, kRefPole1_im},
                       {kRefPole2_re, kRefPole2_im},
                       {kRefPole3_re, kRefPole3_im}};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(poles[i].k - ref[i]) <= 1e-10 * std::abs(ref[i]));
    CHECK(poles[i].residual < 1e-10);
    CHECK(poles[i].k.imag() < 0.0);
    CHECK(poles[i].k.real() > 0.0);
  }
}

TEST_CASE("pole family structure for the 16-pole table") {
  const PhysicalConstants pc = default_constants();
  const auto poles = find_poles(kBar, 16, pc);
  REQUIRE(poles.size() == 16);
  for (std::size_t i = 1; i < poles.size(); ++i)
    CHECK(std::abs(poles[i].k) > std::abs(poles[i - 1].k));
  for (const auto& p : poles) {
    CHECK(p.residual < 1e-10);
    // mirror pole -conj(k) satisfies the same condition
    CHECK(pole_condition_residual(kBar, -std::conj(p.k), pc) < 1e-9);
  }
  // barrier-top spacing: Re k_n ~ n pi / L for large n
  for (int n = 10; n <= 16; ++n) {
    const double expected = n * M_PI / kBar.width;
    CHECK(std::abs(poles[static_cast<std::size_t>(n - 1)].k.real() / expected - 1.0) < 0.10);
  }
}

TEST_CASE("resonant state data: symmetry, residue identity") {
  const PhysicalConstants pc = default_constants();
  const auto poles = find_poles(kBar, 3, pc);
  const cplx residues[3] = {{kRefPole1_res_re, kRefPole1_res_im},
                            {kRefPole2_res_re, kRefPole2_res_im},
                            {kRefPole3_res_re, kRefPole3_res_im}};
  for (int i = 0; i < 3; ++i) {
    const auto [u0, uL] = resonant_state_data(kBar, poles[i].k, pc);
    // reflection symmetry of the barrier
    CHECK(std::abs(u0) == doctest::Approx(std::abs(uL)).epsilon(1e-10));
    CHECK(std::abs(u0 * uL - poles[i].u0uL) < 1e-12 * std::abs(poles[i].u0uL));
    // residue of T(k) at the pole equals i u(0) u(L) e^{-i k L}
    const cplx predicted = cplx(0.0, 1.0) * poles[i].u0uL *
                           std::exp(cplx(0.0, -1.0) * poles[i].k * kBar.width);
    CHECK(std::abs(predicted - residues[i]) <= 1e-6 * std::abs(residues[i]));
  }
  CHECK_THROWS_AS((void)resonant_state_data(kBar, cplx(0.77, -0.1), pc),
                  std::invalid_argument);
}

TEST_CASE("antibound poles: none for the thick barrier, one in the thin limit") {
  const PhysicalConstants pc = default_constants();
  CHECK(find_antibound(kBar, pc).empty());

  const SquareBarrier thin{200.0, 0.01};  // b_s = V0 L = 2.0 eV A
  const auto anti = find_antibound(thin, pc);
  REQUIRE(anti.size() >= 1);
  CHECK(anti[0].k.real() == 0.0);
  CHECK(-anti[0].k.imag() == doctest::Approx(kRefAntiboundThin).epsilon(1e-8));
}

TEST_CASE("transient expansion: initial condition and long-time plateau") {
  const PhysicalConstants pc = default_constants();
  const PoleTable table = make_pole_table(kBar, 16, pc);
  const double k = kRefKFig1;

  const BarrierEval zero = psi_barrier(6.0, k, 0.0, table, 16, ShutterKind::absorbing);
  CHECK(std::abs(zero.psi) < 1e-3);

  const double t2 = std::norm(transmission_square(k, kBar, pc));
  const BarrierEval late = psi_barrier(6.0, k, 1e8, table, 16, ShutterKind::absorbing);
  CHECK(std::norm(late.psi) == doctest::Approx(t2).epsilon(1e-3));

  // reflecting variant reaches the same plateau
  const BarrierEval later = psi_barrier(6.0, k, 1e8, table, 16, ShutterKind::reflecting);
  CHECK(std::norm(later.psi) == doctest::Approx(t2).epsilon(1e-3));

  CHECK_THROWS_AS((void)psi_barrier(4.0, k, 1.0, table, 16, ShutterKind::absorbing),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)psi_barrier(6.0, -k, 1.0, table, 16, ShutterKind::absorbing),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)psi_barrier(6.0, k, 1.0, table, 40, ShutterKind::absorbing),
                  std::invalid_argument);
}

TEST_CASE("expansion converges as the pole count doubles") {
  const PhysicalConstants pc = default_constants();
  const PoleTable table = make_pole_table(kBar, 32, pc);
  const double k = kRefKFig1;
  const double x = 5.5;
  const double t = 0.05;
  const cplx ref = psi_barrier(x, k, t, table, 32, ShutterKind::absorbing).psi;
  double prev = 1e300;
  for (const int n : {4, 8, 16}) {
    const cplx psi_n = psi_barrier(x, k, t, table, n, ShutterKind::absorbing).psi;
    const double err = std::abs(psi_n - ref);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("short-time slope of the density is linear in t") {
  const PhysicalConstants pc = default_constants();
  const PoleTable table = make_pole_table(kBar, 16, pc);
  const double k = kRefKFig1;
  // decade chosen so width >> hbar |k_n| t / m for every retained pole
  const double d1 = std::norm(psi_barrier(5.0, k, 1e-6, table, 16, ShutterKind::absorbing).psi);
  const double d2 = std::norm(psi_barrier(5.0, k, 1e-4, table, 16, ShutterKind::absorbing).psi);
  const double slope = std::log(d2 / d1) / std::log(1e-4 / 1e-6);
  CHECK(slope > 0.95);
  CHECK(slope < 1.05);
}

TEST_CASE("thin-barrier limit approaches the delta solution") {
  const PhysicalConstants pc = default_constants();
  const SquareBarrier thin{200.0, 0.01};  // V0 L = 2.0 eV A
  const PoleTable table = make_pole_table(thin, 16, pc);
  REQUIRE(!table.antibound.empty());
  const DeltaPotential pot = DeltaPotential::from_strength(2.0, pc);
  const double k = kRefKFig1;
  for (const double t : {1e-3, 5e-3, 0.1}) {
    const cplx barrier = psi_barrier(0.3, k, t, table, 16, ShutterKind::absorbing).psi;
    const cplx delta = psi_delta(0.3, k, t, pot, pc);
    CHECK(std::abs(barrier - delta) < 0.05 * std::abs(delta));
  }
}
