#pragma once

#include <vector>

namespace qtr {

struct BesselSeqResult {
  std::vector<double> values;  // J_0(x) .. J_{n_max}(x)
  double est_abs_err;
};

// J_0..J_{n_max} by downward (Miller) recurrence, normalized with
// J_0 + 2 sum_k J_{2k} = 1. Requires n_max >= 0 and finite x >= 0.
BesselSeqResult bessel_j_seq(int n_max, double x);

// Same recurrence, but only J_0..J_{n_keep} are stored. The recurrence still
// starts above the turning point (order ~ x), so this is the memory-friendly
// form for x >> n_keep. out must have n_keep+1 slots.
double bessel_j_prefix(int n_keep, double x, double* out);

}  // namespace qtr
