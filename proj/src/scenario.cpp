#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "delta_schrodinger.hpp"
#include "klein_gordon.hpp"
#include "moshinsky.hpp"

namespace qtr {

PhysicalConstants Scenario::constants() const {
  return natural_units ? qtr::natural_units() : default_constants();
}

void validate_scenario(const Scenario& sc) {
  if (sc.equation == Equation::klein_gordon && sc.potential == PotentialKind::square)
    throw std::invalid_argument("scenario: klein_gordon + square barrier is not available");
  if (!(sc.energy > 0.0) || !std::isfinite(sc.energy))
    throw std::invalid_argument("scenario: energy must be positive");
  if (sc.potential == PotentialKind::delta && (!std::isfinite(sc.b_s) || sc.b_s < 0.0))
    throw std::invalid_argument("scenario: delta strength must be >= 0");
  if (sc.potential == PotentialKind::square && (!(sc.v0 > 0.0) || !(sc.width > 0.0)))
    throw std::invalid_argument("scenario: square barrier requires v0 > 0 and width > 0");
  if (sc.initial == InitialKind::phase &&
      (!std::isfinite(sc.alpha) || sc.alpha < 0.0 || sc.alpha >= 2.0 * M_PI))
    throw std::invalid_argument("scenario: alpha must lie in [0, 2 pi)");
}

bool scenario_supported(const Scenario& sc) {
  if (sc.equation == Equation::klein_gordon && sc.potential == PotentialKind::square)
    return false;
  if (sc.potential == PotentialKind::delta && sc.initial != InitialKind::absorbing)
    return false;  // only the absorbing delta solution is derived
  if (sc.potential == PotentialKind::square && sc.initial == InitialKind::phase)
    return false;  // barrier expansion exists for absorbing and reflecting only
  return true;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("scenario file line " + std::to_string(lineno) +
                                  ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "equation") {
      if (val == "schrodinger")
        sc.equation = Equation::schrodinger;
      else if (val == "klein_gordon")
        sc.equation = Equation::klein_gordon;
      else
        throw std::invalid_argument("scenario: unknown equation '" + val + "'");
    } else if (key == "potential") {
      if (val == "free")
        sc.potential = PotentialKind::free;
      else if (val == "delta")
        sc.potential = PotentialKind::delta;
      else if (val == "square")
        sc.potential = PotentialKind::square;
      else
        throw std::invalid_argument("scenario: unknown potential '" + val + "'");
    } else if (key == "initial") {
      if (val == "absorbing")
        sc.initial = InitialKind::absorbing;
      else if (val == "reflecting")
        sc.initial = InitialKind::reflecting;
      else if (val == "phase")
        sc.initial = InitialKind::phase;
      else
        throw std::invalid_argument("scenario: unknown initial condition '" + val + "'");
    } else if (key == "alpha") {
      sc.alpha = std::stod(val);
    } else if (key == "energy") {
      sc.energy = std::stod(val);
    } else if (key == "b_s") {
      sc.b_s = std::stod(val);
    } else if (key == "v0") {
      sc.v0 = std::stod(val);
    } else if (key == "width") {
      sc.width = std::stod(val);
    } else if (key == "natural_units") {
      sc.natural_units = (val == "1" || val == "true" || val == "yes");
    } else {
      throw std::invalid_argument("scenario: unknown key '" + key + "'");
    }
  }
  validate_scenario(sc);
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("scenario: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

std::complex<double> eval_scenario(const Scenario& sc, const PoleTable* poles, double x,
                                   double t, int n_poles) {
  validate_scenario(sc);
  if (!scenario_supported(sc))
    throw std::invalid_argument("scenario: no exact solution for this combination");
  const PhysicalConstants pc = sc.constants();
  const Kinematics kin = kinematics_from_energy(sc.energy, pc);

  if (sc.equation == Equation::schrodinger) {
    switch (sc.potential) {
      case PotentialKind::free:
        if (sc.initial == InitialKind::absorbing) return free_absorbing(x, kin.k, t, pc);
        return free_phase(x, kin.k, t,
                          sc.initial == InitialKind::reflecting ? M_PI : sc.alpha, pc);
      case PotentialKind::delta:
        return psi_delta(x, kin.k, t, DeltaPotential::from_strength(sc.b_s, pc), pc);
      case PotentialKind::square: {
        if (poles == nullptr)
          throw std::invalid_argument("scenario: square barrier needs a pole table");
        const int n = std::min<int>(n_poles, static_cast<int>(poles->poles.size()));
        const ShutterKind kind = sc.initial == InitialKind::absorbing
                                     ? ShutterKind::absorbing
                                     : ShutterKind::reflecting;
        return psi_barrier(x, kin.k, t, *poles, n, kind).psi;
      }
    }
  } else {
    switch (sc.potential) {
      case PotentialKind::free:
        if (sc.initial == InitialKind::absorbing) return kg_free(x, kin, t, pc);
        return kg_free_phase(x, kin, t,
                             sc.initial == InitialKind::reflecting ? M_PI : sc.alpha, pc);
      case PotentialKind::delta: {
        const double b0 = sc.b_s / (2.0 * pc.hbar2_over_2m);
        return kg_delta(x, kin, t, KgDeltaCoefficients::make(b0, kin, pc), pc);
      }
      case PotentialKind::square:
        break;  // rejected by validate_scenario
    }
  }
  throw std::logic_error("eval_scenario: unreachable");
}

}  // namespace qtr
