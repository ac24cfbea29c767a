#pragma once

namespace qtr {

// Unit system: energies in eV, lengths in Angstrom, times in fs.
// The default set describes an electron (CODATA 2018).
struct PhysicalConstants {
  double hbar;           // eV fs
  double hbar2_over_2m;  // eV A^2
  double c;              // A/fs
  double mu;             // mc/hbar, 1/A

  double mass() const { return hbar * hbar / (2.0 * hbar2_over_2m); }  // eV fs^2/A^2
  double rest_energy() const { return hbar * c * mu; }                 // eV
  // group velocity of a nonrelativistic plane wave, hbar k / m
  double velocity(double k) const { return 2.0 * hbar2_over_2m * k / hbar; }
};

PhysicalConstants default_constants();

// hbar = m = c = 1 (so mu = 1 and hbar^2/2m = 1/2); used for analytic checks.
PhysicalConstants natural_units();

void validate(const PhysicalConstants& pc);

struct Kinematics {
  double energy;  // eV, nonrelativistic kinetic energy
  double k;       // 1/A, E = (hbar^2/2m) k^2
  double k_r;     // 1/A, relativistic wavenumber
  double e_r;     // 1/A, relativistic energy over hbar c; e_r^2 = k_r^2 + mu^2
};

// Requires E > 0 and the resulting k < mu.
Kinematics kinematics_from_energy(double energy, const PhysicalConstants& pc);

}  // namespace qtr
