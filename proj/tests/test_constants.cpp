#include "doctest.h"

#include <cmath>

#include "constants.hpp"

#include "scalar_ref.inc"

using namespace qtr;

TEST_CASE("default constants are positive and self-consistent") {
  const PhysicalConstants pc = default_constants();
  CHECK(pc.hbar > 0.0);
  CHECK(pc.hbar2_over_2m > 0.0);
  CHECK(pc.c > 0.0);
  CHECK(pc.mu > 0.0);
  CHECK_NOTHROW(validate(pc));

  // rest energy two ways: hbar c mu and 2 (hbar^2/2m) mu^2
  const double rest1 = pc.hbar * pc.c * pc.mu;
  const double rest2 = 2.0 * pc.hbar2_over_2m * pc.mu * pc.mu;
  CHECK(std::abs(rest1 - rest2) < 1e-9 * rest1);
  CHECK(rest1 == doctest::Approx(510998.95).epsilon(1e-8));
  CHECK(pc.hbar2_over_2m == doctest::Approx(3.8099821).epsilon(1e-6));
}

TEST_CASE("natural units") {
  const PhysicalConstants pc = natural_units();
  CHECK(pc.hbar == 1.0);
  CHECK(pc.c == 1.0);
  CHECK(pc.mu == 1.0);
  CHECK(pc.hbar2_over_2m == 0.5);
  CHECK(pc.mass() == doctest::Approx(1.0));
  CHECK_NOTHROW(validate(pc));
}

TEST_CASE("kinematics at 0.01 eV") {
  const PhysicalConstants pc = default_constants();
  const Kinematics kin = kinematics_from_energy(0.01, pc);
  CHECK(kin.k == doctest::Approx(kRefKFig1).epsilon(1e-14));
  CHECK(kin.k == doctest::Approx(0.051233).epsilon(1e-4));
  CHECK(kin.k_r / kin.k - 1.0 > 0.0);
  CHECK(kin.k_r / kin.k - 1.0 < 1e-7);
  const double closure = kin.e_r * kin.e_r - kin.k_r * kin.k_r - pc.mu * pc.mu;
  CHECK(std::abs(closure) < 1e-12 * pc.mu * pc.mu);
}

TEST_CASE("kinematics limits and errors") {
  const PhysicalConstants pc = default_constants();
  const Kinematics tiny = kinematics_from_energy(1e-15, pc);
  CHECK(tiny.k < 1e-7);
  CHECK(tiny.e_r == doctest::Approx(pc.mu).epsilon(1e-12));

  CHECK_THROWS_AS((void)kinematics_from_energy(0.0, pc), std::invalid_argument);
  CHECK_THROWS_AS((void)kinematics_from_energy(-1.0, pc), std::invalid_argument);
  // k >= mu: E >= (hbar^2/2m) mu^2 ~ 2.56e5 eV
  CHECK_THROWS_AS((void)kinematics_from_energy(3e5, pc), std::domain_error);
}

TEST_CASE("kinematics monotone in energy, closure holds across the range") {
  const PhysicalConstants pc = default_constants();
  double prev_k = 0.0, prev_kr = 0.0;
  for (double e = 1e-6; e < 2e5; e *= 3.7) {
    const Kinematics kin = kinematics_from_energy(e, pc);
    CHECK(kin.k > prev_k);
    CHECK(kin.k_r > prev_kr);
    CHECK(std::abs(kin.e_r * kin.e_r - kin.k_r * kin.k_r - pc.mu * pc.mu) <
          1e-12 * kin.e_r * kin.e_r);
    prev_k = kin.k;
    prev_kr = kin.k_r;
  }
}
