#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bessel.hpp"

#include "bessel_ref.inc"
#include "scalar_ref.inc"

using namespace qtr;

TEST_CASE("reference values to 1e-12 absolute") {
  int n_checked = 0;
  for (const auto& r : kBesselRef) {
    const BesselSeqResult seq = bessel_j_seq(r.n, r.x);
    CHECK(std::abs(seq.values[static_cast<std::size_t>(r.n)] - r.jn) <= 1e-12);
    ++n_checked;
  }
  CHECK(n_checked >= 100);
}

TEST_CASE("x = 0 gives the exact unit vector") {
  const BesselSeqResult seq = bessel_j_seq(6, 0.0);
  CHECK(seq.values[0] == 1.0);
  for (int n = 1; n <= 6; ++n) CHECK(seq.values[static_cast<std::size_t>(n)] == 0.0);
}

TEST_CASE("first zero of J_0 and J_1(1)") {
  CHECK(std::abs(bessel_j_seq(0, 2.4048255577).values[0]) < 1e-10);
  CHECK(bessel_j_seq(1, 1.0).values[1] == doctest::Approx(kRefJ1At1).epsilon(1e-13));
  CHECK(bessel_j_seq(1, 1.0).values[1] == doctest::Approx(0.4400505857).epsilon(1e-9));
}

TEST_CASE("normalization sum rule") {
  for (const double x : {0.1, 1.0, 10.0, 50.0}) {
    const int n_max = static_cast<int>(x + 14.0 * std::cbrt(x) + 60.0);
    const BesselSeqResult seq = bessel_j_seq(n_max, x);
    double s = seq.values[0];
    for (int n = 2; n <= n_max; n += 2) s += 2.0 * seq.values[static_cast<std::size_t>(n)];
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("three-term recurrence residual") {
  for (const double x : {0.7, 7.7, 31.0, 420.0}) {
    const int n_max = 60;
    const BesselSeqResult seq = bessel_j_seq(n_max, x);
    double peak = 0.0;
    for (const double v : seq.values) peak = std::max(peak, std::abs(v));
    for (int n = 1; n < n_max; ++n) {
      const double lhs = seq.values[static_cast<std::size_t>(n - 1)] +
                         seq.values[static_cast<std::size_t>(n + 1)] -
                         (2.0 * n / x) * seq.values[static_cast<std::size_t>(n)];
      CHECK(std::abs(lhs) < 1e-10 * peak);
    }
  }
}

TEST_CASE("prefix agrees with a longer sequence") {
  const double x = 300.5;
  std::vector<double> prefix(51);
  bessel_j_prefix(50, x, prefix.data());
  const BesselSeqResult full = bessel_j_seq(400, x);
  for (int n = 0; n <= 50; ++n)
    CHECK(prefix[static_cast<std::size_t>(n)] ==
          doctest::Approx(full.values[static_cast<std::size_t>(n)]).epsilon(1e-12));
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS((void)bessel_j_seq(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)bessel_j_seq(3, -2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)bessel_j_seq(3, std::nan("")), std::invalid_argument);
}
