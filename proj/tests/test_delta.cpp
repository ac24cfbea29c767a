#include "doctest.h"

#include <cmath>
#include <complex>

#include "delta_schrodinger.hpp"
#include "moshinsky.hpp"

#include "scalar_ref.inc"

using namespace qtr;
using cplx = std::complex<double>;

TEST_CASE("reduced strength and validation") {
  const PhysicalConstants pc = default_constants();
  const DeltaPotential pot = DeltaPotential::from_strength(2.0, pc);
  CHECK(pot.b == doctest::Approx(kRefBFig1).epsilon(1e-14));
  CHECK(pot.b == doctest::Approx(pot.b_s / (2.0 * pc.hbar2_over_2m)).epsilon(1e-15));
  CHECK_THROWS_AS((void)DeltaPotential::from_strength(-0.5, pc), std::invalid_argument);
}

TEST_CASE("stationary amplitudes") {
  const PhysicalConstants pc = default_constants();
  const DeltaPotential off = DeltaPotential::from_strength(0.0, pc);
  CHECK(transmission_delta(0.7, off) == cplx(1.0, 0.0));
  CHECK(reflection_delta(0.7, off) == cplx(0.0, 0.0));

  const DeltaPotential pot = DeltaPotential::from_strength(2.0, pc);
  // at k = b half the flux goes through
  CHECK(std::norm(transmission_delta(pot.b, pot)) == doctest::Approx(0.5).epsilon(1e-14));
  for (const double k : {0.01, kRefKFig1, 0.3, 2.0}) {
    const cplx t = transmission_delta(k, pot);
    const cplx r = reflection_delta(k, pot);
    CHECK(std::abs(t + r - 1.0) < 1e-15);
    CHECK(std::norm(t) + std::norm(r) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(std::norm(transmission_delta(kRefKFig1, pot)) ==
        doctest::Approx(kRefT2Fig1).epsilon(1e-13));
  CHECK(std::norm(transmission_delta(kRefKFig1, pot)) ==
        doctest::Approx(0.0367).epsilon(2e-3));
  CHECK_THROWS_AS((void)transmission_delta(0.0, pot), std::invalid_argument);
  CHECK_THROWS_AS((void)reflection_delta(-1.0, pot), std::invalid_argument);
}

TEST_CASE("transmitted wave: limits and reductions") {
  const PhysicalConstants pc = default_constants();
  const double k = kRefKFig1;

  // b = 0 reduces to the free absorbing solution
  const DeltaPotential off = DeltaPotential::from_strength(0.0, pc);
  for (const double t : {1e-4, 0.1, 2.0}) {
    CHECK(std::abs(psi_delta(0.3, k, t, off, pc) - free_absorbing(0.3, k, t, pc)) <
          1e-15);
  }

  const DeltaPotential pot = DeltaPotential::from_strength(2.0, pc);
  CHECK(psi_delta(0.3, k, 0.0, pot, pc) == cplx(0.0, 0.0));

  // long-time plateau |T|^2
  const double plateau = std::norm(psi_delta(0.3, k, 5e7, pot, pc));
  CHECK(plateau == doctest::Approx(kRefT2Fig1).epsilon(1e-3));

  CHECK_THROWS_AS((void)psi_delta(0.0, k, 1.0, pot, pc), std::invalid_argument);
  CHECK_THROWS_AS((void)psi_delta(-0.2, k, 1.0, pot, pc), std::invalid_argument);
}

TEST_CASE("short-time linear rise of the density") {
  const PhysicalConstants pc = default_constants();
  const DeltaPotential pot = DeltaPotential::from_strength(2.0, pc);
  const double k = kRefKFig1;
  const double d1 = std::norm(psi_delta(0.3, k, 1e-7, pot, pc));
  const double d2 = std::norm(psi_delta(0.3, k, 1e-5, pot, pc));
  const double slope = std::log(d2 / d1) / std::log(1e-5 / 1e-7);
  CHECK(slope > 0.98);
  CHECK(slope < 1.02);
}
