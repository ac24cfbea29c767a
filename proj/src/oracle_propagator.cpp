#include "oracle_propagator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtr {
namespace {

using cplx = std::complex<double>;

struct GridLayout {
  long n_nodes;
  long j_zero;  // node nearest to x = 0
  double dx;

  double x_of(long j) const { return x_min + static_cast<double>(j) * dx; }
  double x_min;
};

GridLayout layout(const Grid1D& g) {
  if (!(g.x_min < 0.0) || !(g.x_max > 0.0))
    throw std::invalid_argument("grid: requires x_min < 0 < x_max");
  if (!(g.dx > 0.0) || !(g.dt > 0.0) || g.n_steps < 1)
    throw std::invalid_argument("grid: dx, dt, n_steps must be positive");
  const long n = static_cast<long>(std::round((g.x_max - g.x_min) / g.dx)) + 1;
  if (n < 16) throw std::invalid_argument("grid: too few nodes");
  GridLayout lay{n, std::lround(-g.x_min / g.dx), g.dx, g.x_min};
  if (lay.j_zero <= 2 || lay.j_zero >= n - 3)
    throw std::invalid_argument("grid: x = 0 must be interior");
  return lay;
}

std::vector<long> probe_nodes(const Grid1D& g, const GridLayout& lay) {
  if (g.probes.empty()) throw std::invalid_argument("grid: no probes given");
  std::vector<long> idx;
  for (const double p : g.probes) {
    if (!(p > 0.0) || !(p < g.x_max))
      throw std::invalid_argument("grid: probe " + std::to_string(p) +
                                  " outside (0, x_max)");
    idx.push_back(std::lround((p - g.x_min) / g.dx));
  }
  return idx;
}

// Containment: spurious signal from either wall, travelling at `speed`, must
// not reach any probe within the simulated window.
void check_containment(const Grid1D& g, double speed) {
  const double horizon = speed * g.dt * static_cast<double>(g.n_steps);
  for (const double p : g.probes) {
    if (p - g.x_min <= horizon)
      throw std::invalid_argument("grid: left wall too close, junk reaches probe " +
                                  std::to_string(p));
    if (2.0 * g.x_max - p <= horizon)
      throw std::invalid_argument("grid: right wall too close, junk reaches probe " +
                                  std::to_string(p));
  }
}

// Initial cut-off wave on the nodes. wavenumber is k (Schrodinger) or k_r (KG).
std::vector<cplx> initial_wave(const Scenario& sc, const GridLayout& lay, double wavenumber) {
  std::vector<cplx> psi(static_cast<std::size_t>(lay.n_nodes), cplx(0.0, 0.0));
  double alpha = sc.alpha;
  bool two_sided = sc.initial != InitialKind::absorbing;
  if (sc.initial == InitialKind::reflecting) alpha = M_PI;
  for (long j = 1; j < lay.n_nodes - 1; ++j) {
    const double x = lay.x_of(j);
    if (j < lay.j_zero) {
      const cplx right(std::cos(wavenumber * x), std::sin(wavenumber * x));
      psi[static_cast<std::size_t>(j)] =
          two_sided
              ? right + cplx(std::cos(alpha), std::sin(alpha)) * std::conj(right)
              : right;
    } else if (j == lay.j_zero) {
      // midpoint value of the jump
      psi[static_cast<std::size_t>(j)] =
          two_sided ? 0.5 * (1.0 + cplx(std::cos(alpha), std::sin(alpha))) : cplx(0.5, 0.0);
    }
  }
  return psi;
}

std::vector<double> schrodinger_potential(const Scenario& sc, const GridLayout& lay) {
  std::vector<double> v(static_cast<std::size_t>(lay.n_nodes), 0.0);
  if (sc.potential == PotentialKind::delta) {
    // derivative-jump condition psi'(0+) - psi'(0-) = 2 b psi(0) folded into
    // the second-difference stencil == single node of height b_s/dx
    v[static_cast<std::size_t>(lay.j_zero)] = sc.b_s / lay.dx;
  } else if (sc.potential == PotentialKind::square) {
    for (long j = 1; j < lay.n_nodes - 1; ++j) {
      const double lo = lay.x_of(j) - 0.5 * lay.dx;
      const double hi = lay.x_of(j) + 0.5 * lay.dx;
      const double cover = std::max(0.0, std::min(hi, sc.width) - std::max(lo, 0.0));
      v[static_cast<std::size_t>(j)] = sc.v0 * cover / lay.dx;
    }
  }
  return v;
}

}  // namespace

CrankNicolsonStepper::CrankNicolsonStepper(std::vector<double> potential, double dx, double dt,
                                           const PhysicalConstants& pc)
    : pot_(std::move(potential)), dx_(dx), dt_(dt), pc_(pc) {
  if (pot_.size() < 3) throw std::invalid_argument("CrankNicolsonStepper: grid too small");
  rhs_.resize(pot_.size());
  cprime_.resize(pot_.size());
}

void CrankNicolsonStepper::step(std::vector<cplx>& psi) const {
  const std::size_t n = pot_.size();
  if (psi.size() != n) throw std::invalid_argument("CrankNicolsonStepper: size mismatch");
  const double d = pc_.hbar2_over_2m;
  const cplx lam = cplx(0.0, dt_ / (2.0 * pc_.hbar));  // i dt / (2 hbar)
  const cplx off = -lam * (d / (dx_ * dx_));           // A off-diagonal
  const cplx boff = -off;
  // rhs = (I - lam H) psi with Dirichlet walls
  rhs_[0] = cplx(0.0, 0.0);
  rhs_[n - 1] = cplx(0.0, 0.0);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const cplx diag = 1.0 - lam * (2.0 * d / (dx_ * dx_) + pot_[j]);
    rhs_[j] = diag * psi[j] + boff * (psi[j - 1] + psi[j + 1]);
  }
  // Thomas solve of (I + lam H) psi_new = rhs on the interior
  cplx denom = 1.0 + lam * (2.0 * d / (dx_ * dx_) + pot_[1]);
  cprime_[1] = off / denom;
  psi[1] = rhs_[1] / denom;
  for (std::size_t j = 2; j + 1 < n; ++j) {
    const cplx diag = 1.0 + lam * (2.0 * d / (dx_ * dx_) + pot_[j]);
    denom = diag - off * cprime_[j - 1];
    cprime_[j] = off / denom;
    psi[j] = (rhs_[j] - off * psi[j - 1]) / denom;
  }
  psi[0] = cplx(0.0, 0.0);
  psi[n - 1] = cplx(0.0, 0.0);
  for (std::size_t j = n - 3; j >= 1; --j) {
    psi[j] -= cprime_[j] * psi[j + 1];
    if (j == 1) break;
  }
}

double grid_norm(const std::vector<cplx>& psi, double dx) {
  double s = 0.0;
  for (const cplx& v : psi) s += std::norm(v);
  return s * dx;
}

ProbeSeries propagate_schrodinger(const Scenario& sc, const Grid1D& grid) {
  validate_scenario(sc);
  if (sc.equation != Equation::schrodinger)
    throw std::invalid_argument("propagate_schrodinger: scenario is not schrodinger");
  const PhysicalConstants pc = sc.constants();
  const Kinematics kin = kinematics_from_energy(sc.energy, pc);
  const GridLayout lay = layout(grid);
  const auto nodes = probe_nodes(grid, lay);
  check_containment(grid, 3.0 * pc.velocity(kin.k));

  std::vector<cplx> psi = initial_wave(sc, lay, kin.k);
  CrankNicolsonStepper stepper(schrodinger_potential(sc, lay), lay.dx, grid.dt, pc);

  ProbeSeries out;
  out.times.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  out.psi.assign(nodes.size(), {});
  for (auto& series : out.psi) series.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  for (long step = 0; step <= grid.n_steps; ++step) {
    out.times.push_back(static_cast<double>(step) * grid.dt);
    for (std::size_t p = 0; p < nodes.size(); ++p)
      out.psi[p].push_back(psi[static_cast<std::size_t>(nodes[p])]);
    if (step < grid.n_steps) stepper.step(psi);
  }
  return out;
}

ProbeSeries propagate_kg(const Scenario& sc, const Grid1D& grid) {
  validate_scenario(sc);
  if (sc.equation != Equation::klein_gordon)
    throw std::invalid_argument("propagate_kg: scenario is not klein_gordon");
  if (sc.potential == PotentialKind::square)
    throw std::invalid_argument("propagate_kg: square barrier not available");
  const PhysicalConstants pc = sc.constants();
  const Kinematics kin = kinematics_from_energy(sc.energy, pc);
  const GridLayout lay = layout(grid);
  const auto nodes = probe_nodes(grid, lay);
  check_containment(grid, pc.c);

  // mass + potential profile, units 1/A^2: mu^2 + b_r * bump(x), b_r = b_s/(hbar^2/2m)
  std::vector<double> m2(static_cast<std::size_t>(lay.n_nodes), pc.mu * pc.mu);
  if (sc.potential == PotentialKind::delta) {
    const double b_r = sc.b_s / pc.hbar2_over_2m;
    const double weights[5] = {0.5, 1.0, 1.0, 1.0, 0.5};  // width 4 dx, unit area
    for (int m = -2; m <= 2; ++m)
      m2[static_cast<std::size_t>(lay.j_zero + m)] +=
          b_r * weights[m + 2] / (4.0 * lay.dx);
  }
  double m2_max = 0.0;
  for (const double v : m2) m2_max = std::max(m2_max, v);
  const double r = pc.c * grid.dt / lay.dx;
  if (r * r * (1.0 + 0.25 * m2_max * lay.dx * lay.dx) > 1.0 + 1e-12)
    throw std::invalid_argument("propagate_kg: stability bound violated, reduce dt");

  const std::vector<cplx> psi0 = initial_wave(sc, lay, kin.k_r);
  const std::size_t n = psi0.size();
  const double c2dt2 = pc.c * pc.c * grid.dt * grid.dt;
  const double inv_dx2 = 1.0 / (lay.dx * lay.dx);

  // second level from psi_t(x,0) = -i c E_r psi0 and the equation itself
  std::vector<cplx> prev = psi0, cur(n, cplx(0.0, 0.0)), next(n, cplx(0.0, 0.0));
  const cplx dt_phase(0.0, -pc.c * kin.e_r * grid.dt);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const cplx lap = (psi0[j + 1] - 2.0 * psi0[j] + psi0[j - 1]) * inv_dx2;
    cur[j] = psi0[j] + dt_phase * psi0[j] + 0.5 * c2dt2 * (lap - m2[j] * psi0[j]);
  }

  ProbeSeries out;
  out.times.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  out.psi.assign(nodes.size(), {});
  for (auto& series : out.psi) series.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
  const auto record = [&](long step, const std::vector<cplx>& state) {
    out.times.push_back(static_cast<double>(step) * grid.dt);
    for (std::size_t p = 0; p < nodes.size(); ++p)
      out.psi[p].push_back(state[static_cast<std::size_t>(nodes[p])]);
  };
  record(0, prev);
  if (grid.n_steps >= 1) record(1, cur);
  for (long step = 2; step <= grid.n_steps; ++step) {
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const cplx lap = (cur[j + 1] - 2.0 * cur[j] + cur[j - 1]) * inv_dx2;
      next[j] = 2.0 * cur[j] - prev[j] + c2dt2 * (lap - m2[j] * cur[j]);
    }
    next[0] = cplx(0.0, 0.0);
    next[n - 1] = cplx(0.0, 0.0);
    std::swap(prev, cur);
    std::swap(cur, next);
    record(step, cur);
  }
  return out;
}

}  // namespace qtr
