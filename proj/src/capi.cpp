#include "qtransients.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "barrier_resonances.hpp"
#include "bessel.hpp"
#include "constants.hpp"
#include "delta_schrodinger.hpp"
#include "faddeeva.hpp"
#include "klein_gordon.hpp"
#include "moshinsky.hpp"
#include "oracle_propagator.hpp"
#include "scenario.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

template <typename F>
qtr_status guarded(F&& body) noexcept {
  try {
    body();
    return QTR_OK;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QTR_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return QTR_ERR_DOMAIN;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return QTR_ERR_NO_CONVERGENCE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QTR_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown exception");
    return QTR_ERR_INTERNAL;
  }
}

void store(std::complex<double> v, double* re, double* im) {
  if (re) *re = v.real();
  if (im) *im = v.imag();
}

qtr::Scenario to_scenario(const qtr_scenario* sc) {
  if (!sc) throw std::invalid_argument("scenario pointer is null");
  qtr::Scenario out;
  switch (sc->equation) {
    case 0: out.equation = qtr::Equation::schrodinger; break;
    case 1: out.equation = qtr::Equation::klein_gordon; break;
    default: throw std::invalid_argument("scenario.equation must be 0 or 1");
  }
  switch (sc->potential) {
    case 0: out.potential = qtr::PotentialKind::free; break;
    case 1: out.potential = qtr::PotentialKind::delta; break;
    case 2: out.potential = qtr::PotentialKind::square; break;
    default: throw std::invalid_argument("scenario.potential must be 0, 1 or 2");
  }
  switch (sc->initial) {
    case 0: out.initial = qtr::InitialKind::absorbing; break;
    case 1: out.initial = qtr::InitialKind::reflecting; break;
    case 2: out.initial = qtr::InitialKind::phase; break;
    default: throw std::invalid_argument("scenario.initial must be 0, 1 or 2");
  }
  out.alpha = sc->alpha;
  out.energy = sc->energy_ev;
  out.b_s = sc->b_s;
  out.v0 = sc->v0;
  out.width = sc->width;
  out.natural_units = sc->natural_units != 0;
  return out;
}

void from_scenario(const qtr::Scenario& in, qtr_scenario* sc) {
  sc->equation = in.equation == qtr::Equation::schrodinger ? 0 : 1;
  sc->potential = in.potential == qtr::PotentialKind::free
                      ? 0
                      : (in.potential == qtr::PotentialKind::delta ? 1 : 2);
  sc->initial = in.initial == qtr::InitialKind::absorbing
                    ? 0
                    : (in.initial == qtr::InitialKind::reflecting ? 1 : 2);
  sc->alpha = in.alpha;
  sc->energy_ev = in.energy;
  sc->b_s = in.b_s;
  sc->v0 = in.v0;
  sc->width = in.width;
  sc->natural_units = in.natural_units ? 1 : 0;
}

const qtr::PhysicalConstants& deref(const qtr_constants* pc);

}  // namespace

struct qtr_constants {
  qtr::PhysicalConstants value;
};

struct qtr_poles {
  qtr::PoleTable table;
};

namespace {
const qtr::PhysicalConstants& deref(const qtr_constants* pc) {
  if (!pc) throw std::invalid_argument("constants pointer is null");
  return pc->value;
}
}  // namespace

extern "C" {

const char* qtr_last_error(void) { return g_last_error.c_str(); }

qtr_constants* qtr_constants_default(void) {
  return new qtr_constants{qtr::default_constants()};
}

qtr_constants* qtr_constants_natural(void) {
  return new qtr_constants{qtr::natural_units()};
}

void qtr_constants_free(qtr_constants* pc) { delete pc; }

double qtr_constants_hbar(const qtr_constants* pc) { return pc ? pc->value.hbar : 0.0; }
double qtr_constants_hbar2_over_2m(const qtr_constants* pc) {
  return pc ? pc->value.hbar2_over_2m : 0.0;
}
double qtr_constants_c(const qtr_constants* pc) { return pc ? pc->value.c : 0.0; }
double qtr_constants_mu(const qtr_constants* pc) { return pc ? pc->value.mu : 0.0; }

qtr_status qtr_kinematics(const qtr_constants* pc, double energy_ev, double* k,
                          double* k_r, double* e_r) {
  return guarded([&] {
    const qtr::Kinematics kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    if (k) *k = kin.k;
    if (k_r) *k_r = kin.k_r;
    if (e_r) *e_r = kin.e_r;
  });
}

qtr_status qtr_faddeeva(double z_re, double z_im, double* w_re, double* w_im,
                        double* est_rel_err) {
  return guarded([&] {
    const qtr::FaddeevaResult r = qtr::faddeeva({z_re, z_im});
    store(r.value, w_re, w_im);
    if (est_rel_err) *est_rel_err = r.est_rel_err;
  });
}

qtr_status qtr_bessel_j_seq(int n_max, double x, double* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("qtr_bessel_j_seq: out is null");
    qtr::bessel_j_prefix(n_max, x, out);
  });
}

qtr_status qtr_moshinsky_m(const qtr_constants* pc, double x, double q_re, double q_im,
                           double t, double* out_re, double* out_im) {
  return guarded([&] {
    store(qtr::moshinsky_m(x, {q_re, q_im}, t, deref(pc)), out_re, out_im);
  });
}

qtr_status qtr_free_absorbing(const qtr_constants* pc, double x, double energy_ev,
                              double t, double* out_re, double* out_im) {
  return guarded([&] {
    const auto kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    store(qtr::free_absorbing(x, kin.k, t, deref(pc)), out_re, out_im);
  });
}

qtr_status qtr_free_phase(const qtr_constants* pc, double x, double energy_ev, double t,
                          double alpha, double* out_re, double* out_im) {
  return guarded([&] {
    const auto kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    store(qtr::free_phase(x, kin.k, t, alpha, deref(pc)), out_re, out_im);
  });
}

qtr_status qtr_delta_amplitudes(const qtr_constants* pc, double b_s, double k,
                                double* t_re, double* t_im, double* r_re, double* r_im) {
  return guarded([&] {
    const auto pot = qtr::DeltaPotential::from_strength(b_s, deref(pc));
    store(qtr::transmission_delta(k, pot), t_re, t_im);
    store(qtr::reflection_delta(k, pot), r_re, r_im);
  });
}

qtr_status qtr_psi_delta(const qtr_constants* pc, double x, double energy_ev, double t,
                         double b_s, double* out_re, double* out_im) {
  return guarded([&] {
    const auto kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    const auto pot = qtr::DeltaPotential::from_strength(b_s, deref(pc));
    store(qtr::psi_delta(x, kin.k, t, pot, deref(pc)), out_re, out_im);
  });
}

qtr_status qtr_kg_free(const qtr_constants* pc, double x, double energy_ev, double t,
                       double* out_re, double* out_im) {
  return guarded([&] {
    const auto kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    store(qtr::kg_free(x, kin, t, deref(pc)), out_re, out_im);
  });
}

qtr_status qtr_kg_free_q(const qtr_constants* pc, double x, double energy_ev, double t,
                         double q_re, double q_im, double* out_re, double* out_im) {
  return guarded([&] {
    const auto kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    store(qtr::kg_free(x, kin, t, deref(pc), {q_re, q_im}), out_re, out_im);
  });
}

qtr_status qtr_kg_free_phase(const qtr_constants* pc, double x, double energy_ev, double t,
                             double alpha, double* out_re, double* out_im) {
  return guarded([&] {
    const auto kin = qtr::kinematics_from_energy(energy_ev, deref(pc));
    store(qtr::kg_free_phase(x, kin, t, alpha, deref(pc)), out_re, out_im);
  });
}

qtr_status qtr_kg_delta(const qtr_constants* pc, double x, double energy_ev, double t,
                        double b_s, double* out_re, double* out_im) {
  return guarded([&] {
    const auto& consts = deref(pc);
    const auto kin = qtr::kinematics_from_energy(energy_ev, consts);
    const double b0 = b_s / (2.0 * consts.hbar2_over_2m);
    const auto coeffs = qtr::KgDeltaCoefficients::make(b0, kin, consts);
    store(qtr::kg_delta(x, kin, t, coeffs, consts), out_re, out_im);
  });
}

qtr_status qtr_kg_delta_coefficients(const qtr_constants* pc, double energy_ev, double b_s,
                                     double coeffs_out[8]) {
  return guarded([&] {
    if (!coeffs_out) throw std::invalid_argument("coeffs_out is null");
    const auto& consts = deref(pc);
    const auto kin = qtr::kinematics_from_energy(energy_ev, consts);
    const double b0 = b_s / (2.0 * consts.hbar2_over_2m);
    const auto co = qtr::KgDeltaCoefficients::make(b0, kin, consts);
    coeffs_out[0] = co.a.real();
    coeffs_out[1] = co.a.imag();
    coeffs_out[2] = co.b.real();
    coeffs_out[3] = co.b.imag();
    coeffs_out[4] = co.c.real();
    coeffs_out[5] = co.c.imag();
    coeffs_out[6] = co.d.real();
    coeffs_out[7] = co.d.imag();
  });
}

qtr_status qtr_transmission_square(const qtr_constants* pc, double v0, double width,
                                   double k, double* t_re, double* t_im) {
  return guarded([&] {
    store(qtr::transmission_square(k, {v0, width}, deref(pc)), t_re, t_im);
  });
}

qtr_status qtr_reflection_square(const qtr_constants* pc, double v0, double width,
                                 double k, double* r_re, double* r_im) {
  return guarded([&] {
    store(qtr::reflection_square(k, {v0, width}, deref(pc)), r_re, r_im);
  });
}

qtr_poles* qtr_poles_create(const qtr_constants* pc, double v0, double width, int n_max,
                            qtr_status* status) {
  qtr_poles* out = nullptr;
  const qtr_status st = guarded([&] {
    out = new qtr_poles{qtr::make_pole_table({v0, width}, n_max, deref(pc))};
  });
  if (status) *status = st;
  return out;
}

void qtr_poles_free(qtr_poles* table) { delete table; }

int qtr_poles_count(const qtr_poles* table) {
  return table ? static_cast<int>(table->table.poles.size()) : 0;
}

int qtr_poles_antibound_count(const qtr_poles* table) {
  return table ? static_cast<int>(table->table.antibound.size()) : 0;
}

qtr_status qtr_poles_get(const qtr_poles* table, int i, double* k_re, double* k_im,
                         double* u0ul_re, double* u0ul_im, double* residual) {
  return guarded([&] {
    if (!table) throw std::invalid_argument("poles pointer is null");
    const auto& poles = table->table.poles;
    if (i < 0 || static_cast<std::size_t>(i) >= poles.size())
      throw std::invalid_argument("pole index out of range");
    const auto& p = poles[static_cast<std::size_t>(i)];
    if (k_re) *k_re = p.k.real();
    if (k_im) *k_im = p.k.imag();
    if (u0ul_re) *u0ul_re = p.u0uL.real();
    if (u0ul_im) *u0ul_im = p.u0uL.imag();
    if (residual) *residual = p.residual;
  });
}

qtr_status qtr_psi_barrier(const qtr_poles* table, double x, double energy_ev, double t,
                           int n_poles, int reflecting, double* out_re, double* out_im,
                           double* truncation) {
  return guarded([&] {
    if (!table) throw std::invalid_argument("poles pointer is null");
    const auto kin = qtr::kinematics_from_energy(energy_ev, table->table.consts);
    const auto r = qtr::psi_barrier(x, kin.k, t, table->table, n_poles,
                                    reflecting ? qtr::ShutterKind::reflecting
                                               : qtr::ShutterKind::absorbing);
    store(r.psi, out_re, out_im);
    if (truncation) *truncation = r.truncation;
  });
}

qtr_status qtr_scenario_load(const char* path, qtr_scenario* out) {
  return guarded([&] {
    if (!path || !out) throw std::invalid_argument("qtr_scenario_load: null argument");
    from_scenario(qtr::parse_scenario_file(path), out);
  });
}

qtr_status qtr_scenario_validate(const qtr_scenario* sc) {
  return guarded([&] { qtr::validate_scenario(to_scenario(sc)); });
}

int qtr_scenario_supported(const qtr_scenario* sc) {
  try {
    return qtr::scenario_supported(to_scenario(sc)) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

qtr_status qtr_scenario_eval(const qtr_scenario* sc, const qtr_poles* poles, double x,
                             double t, int n_poles, double* out_re, double* out_im) {
  return guarded([&] {
    const qtr::Scenario s = to_scenario(sc);
    const qtr::PoleTable* table = poles ? &poles->table : nullptr;
    store(qtr::eval_scenario(s, table, x, t, n_poles), out_re, out_im);
  });
}

qtr_status qtr_oracle_propagate(const qtr_scenario* sc, const qtr_grid* grid,
                                const double* probes, int n_probes, double* out) {
  return guarded([&] {
    if (!grid || !probes || !out || n_probes < 1)
      throw std::invalid_argument("qtr_oracle_propagate: null/empty argument");
    const qtr::Scenario s = to_scenario(sc);
    qtr::Grid1D g;
    g.x_min = grid->x_min;
    g.x_max = grid->x_max;
    g.dx = grid->dx;
    g.dt = grid->dt;
    g.n_steps = grid->n_steps;
    g.probes.assign(probes, probes + n_probes);
    const qtr::ProbeSeries series = (s.equation == qtr::Equation::schrodinger)
                                        ? qtr::propagate_schrodinger(s, g)
                                        : qtr::propagate_kg(s, g);
    const std::size_t per_probe = series.times.size();
    for (int p = 0; p < n_probes; ++p) {
      for (std::size_t i = 0; i < per_probe; ++i) {
        out[2 * (static_cast<std::size_t>(p) * per_probe + i)] =
            series.psi[static_cast<std::size_t>(p)][i].real();
        out[2 * (static_cast<std::size_t>(p) * per_probe + i) + 1] =
            series.psi[static_cast<std::size_t>(p)][i].imag();
      }
    }
  });
}

}  // extern "C"
