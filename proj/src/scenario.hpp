#pragma once

#include <complex>
#include <string>

#include "barrier_resonances.hpp"
#include "constants.hpp"

namespace qtr {

enum class Equation { schrodinger, klein_gordon };
enum class PotentialKind { free, delta, square };
enum class InitialKind { absorbing, reflecting, phase };

// Flat input record shared by every solver and by the CLI.
struct Scenario {
  Equation equation = Equation::schrodinger;
  PotentialKind potential = PotentialKind::free;
  InitialKind initial = InitialKind::absorbing;
  double alpha = 0.0;    // rad, used when initial == phase; must be in [0, 2 pi)
  double energy = 0.01;  // eV
  double b_s = 0.0;      // eV A, delta strength
  double v0 = 0.0;       // eV, square barrier height
  double width = 0.0;    // A, square barrier width
  bool natural_units = false;

  PhysicalConstants constants() const;
};

// Throws std::invalid_argument for unsupported combinations
// (klein_gordon + square, negative delta strength, alpha out of range, ...).
void validate_scenario(const Scenario& sc);

// True when the combination has an exact transmitted-wave evaluator.
bool scenario_supported(const Scenario& sc);

// Parses the flat key=value scenario file format ('#' comments, blank lines
// allowed). Keys: equation, potential, initial, alpha, energy, b_s, v0, width.
Scenario parse_scenario_file(const std::string& path);
Scenario parse_scenario_text(const std::string& text);

// Exact transmitted wave at (x, t). `poles` is required for square barriers
// and ignored otherwise; it must have been built for the same barrier.
std::complex<double> eval_scenario(const Scenario& sc, const PoleTable* poles, double x,
                                   double t, int n_poles = 24);

}  // namespace qtr
