#pragma once

#include <complex>
#include <vector>

#include "scenario.hpp"

namespace qtr {

// Finite-difference grid for the cross-validation runs. The domain is
// truncated with hard walls; containment (no wall reflection can reach a
// probe inside the simulated window) is checked, not absorbed.
struct Grid1D {
  double x_min = 0.0;  // A, < 0
  double x_max = 0.0;  // A, > 0
  double dx = 0.0;     // A
  double dt = 0.0;     // fs
  long n_steps = 0;
  std::vector<double> probes;  // A, inside (0, x_max)
};

struct ProbeSeries {
  std::vector<double> times;                           // n_steps + 1 entries
  std::vector<std::vector<std::complex<double>>> psi;  // one series per probe
};

// One implicit unitary time step on a Dirichlet-wall grid; exposed so the
// norm-conservation property can be checked on arbitrary states.
class CrankNicolsonStepper {
 public:
  // potential[j] in eV on nodes x_j; dx in A, dt in fs.
  CrankNicolsonStepper(std::vector<double> potential, double dx, double dt,
                       const PhysicalConstants& pc);
  void step(std::vector<std::complex<double>>& psi) const;
  std::size_t size() const { return pot_.size(); }

 private:
  std::vector<double> pot_;
  double dx_, dt_;
  PhysicalConstants pc_;
  mutable std::vector<std::complex<double>> rhs_, cprime_;
};

double grid_norm(const std::vector<std::complex<double>>& psi, double dx);

// Crank-Nicolson propagation of the cut-off initial wave. The delta barrier
// enters as the exact derivative-jump stencil (a single node of height
// b_s/dx); the square barrier is laid down by cell coverage.
ProbeSeries propagate_schrodinger(const Scenario& sc, const Grid1D& grid);

// Explicit leapfrog for the second-order relativistic equation; the second
// time level comes from the exact pre-opening time derivative -i c E_r psi.
// The delta barrier is a width-4dx equal-area bump. Stability requires
// (c dt/dx)^2 (1 + (mu^2 + V_max) dx^2 / 4) <= 1.
ProbeSeries propagate_kg(const Scenario& sc, const Grid1D& grid);

}  // namespace qtr
