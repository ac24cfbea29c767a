/* qtransients: exact time-dependent transmitted waves for shutter/tunneling
 * problems (Schrodinger free/delta/square-barrier, Klein-Gordon free/delta),
 * plus finite-difference cross-validation propagators.
 *
 * C interface of the shared library. All functions return qtr_status (or a
 * handle plus a status out-parameter); on failure qtr_last_error() holds a
 * thread-local description. Units: eV, Angstrom, fs.
 */
#ifndef QTRANSIENTS_H
#define QTRANSIENTS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtr_status {
  QTR_OK = 0,
  QTR_ERR_INVALID_ARGUMENT = 1,
  QTR_ERR_DOMAIN = 2,
  QTR_ERR_NO_CONVERGENCE = 3,
  QTR_ERR_UNSUPPORTED = 4,
  QTR_ERR_INTERNAL = 5
} qtr_status;

/* Message for the most recent failure on this thread. Never NULL. */
const char* qtr_last_error(void);

/* ------------------------------------------------------------------ */
/* Unit system and kinematics                                          */

typedef struct qtr_constants qtr_constants;

qtr_constants* qtr_constants_default(void); /* electron, (eV, A, fs) */
qtr_constants* qtr_constants_natural(void); /* hbar = m = c = 1 */
void qtr_constants_free(qtr_constants* pc);

double qtr_constants_hbar(const qtr_constants* pc);          /* eV fs */
double qtr_constants_hbar2_over_2m(const qtr_constants* pc); /* eV A^2 */
double qtr_constants_c(const qtr_constants* pc);             /* A/fs */
double qtr_constants_mu(const qtr_constants* pc);            /* 1/A */

/* k from E = (hbar^2/2m) k^2, the relativistic k_r = k (1-(k/mu)^2)^{-1/2},
 * and E_r = sqrt(k_r^2 + mu^2) (reciprocal length). Requires E > 0, k < mu. */
qtr_status qtr_kinematics(const qtr_constants* pc, double energy_ev, double* k,
                          double* k_r, double* e_r);

/* ------------------------------------------------------------------ */
/* Special-function kernels                                            */

/* Faddeeva function w(z) = exp(-z^2) erfc(-iz), any complex z. */
qtr_status qtr_faddeeva(double z_re, double z_im, double* w_re, double* w_im,
                        double* est_rel_err);

/* J_0(x)..J_{n_max}(x) into out (n_max+1 slots); n_max >= 0, x >= 0. */
qtr_status qtr_bessel_j_seq(int n_max, double x, double* out);

/* ------------------------------------------------------------------ */
/* Exact transmitted waves                                             */

/* Transient kernel M(x,q,t); q = (q_re, q_im) with q_im <= 0. */
qtr_status qtr_moshinsky_m(const qtr_constants* pc, double x, double q_re, double q_im,
                           double t, double* out_re, double* out_im);

/* Free shutter, absorbing initial wave: psi = M(x,k,t), k from energy_ev. */
qtr_status qtr_free_absorbing(const qtr_constants* pc, double x, double energy_ev,
                              double t, double* out_re, double* out_im);

/* Initial wave e^{ikx} + e^{i alpha} e^{-ikx}; alpha = pi is reflecting. */
qtr_status qtr_free_phase(const qtr_constants* pc, double x, double energy_ev, double t,
                          double alpha, double* out_re, double* out_im);

/* Delta barrier b_s delta(x): stationary amplitudes T = k/(k+ib),
 * R = ib/(k+ib) with b = b_s / (2 hbar^2/2m), and the transmitted wave
 * psi = T M(x,k,t) + R M(x,-ib,t). */
qtr_status qtr_delta_amplitudes(const qtr_constants* pc, double b_s, double k,
                                double* t_re, double* t_im, double* r_re, double* r_im);
qtr_status qtr_psi_delta(const qtr_constants* pc, double x, double energy_ev, double t,
                         double b_s, double* out_re, double* out_im);

/* Free relativistic shutter wave; exactly zero for c t <= x. The effective
 * wavenumber is k_r, -k_r, or (0, -b0) with b0 < mu. */
qtr_status qtr_kg_free(const qtr_constants* pc, double x, double energy_ev, double t,
                       double* out_re, double* out_im);
qtr_status qtr_kg_free_q(const qtr_constants* pc, double x, double energy_ev, double t,
                         double q_re, double q_im, double* out_re, double* out_im);
qtr_status qtr_kg_free_phase(const qtr_constants* pc, double x, double energy_ev, double t,
                             double alpha, double* out_re, double* out_im);

/* Relativistic delta barrier with b0 = b_s / (2 hbar^2/2m); exactly zero for
 * c t <= x. coeffs_out (optional, 8 doubles) receives A, B, C, D re/im. */
qtr_status qtr_kg_delta(const qtr_constants* pc, double x, double energy_ev, double t,
                        double b_s, double* out_re, double* out_im);
qtr_status qtr_kg_delta_coefficients(const qtr_constants* pc, double energy_ev, double b_s,
                                     double coeffs_out[8]);

/* ------------------------------------------------------------------ */
/* Square barrier: stationary amplitudes, poles, transient expansion   */

qtr_status qtr_transmission_square(const qtr_constants* pc, double v0, double width,
                                   double k, double* t_re, double* t_im);
qtr_status qtr_reflection_square(const qtr_constants* pc, double v0, double width,
                                 double k, double* r_re, double* r_im);

/* Immutable table of fourth-quadrant S-matrix poles k_1..k_{n_max} (|k|
 * increasing) plus any poles on the negative imaginary axis. */
typedef struct qtr_poles qtr_poles;

qtr_poles* qtr_poles_create(const qtr_constants* pc, double v0, double width, int n_max,
                            qtr_status* status);
void qtr_poles_free(qtr_poles* table);
int qtr_poles_count(const qtr_poles* table);
int qtr_poles_antibound_count(const qtr_poles* table);
/* i in [0, count): pole k_i, the product u(0)u(L), and the relative residual
 * of the pole condition. */
qtr_status qtr_poles_get(const qtr_poles* table, int i, double* k_re, double* k_im,
                         double* u0ul_re, double* u0ul_im, double* residual);

/* Transmitted wave for x >= width via the resonance expansion over the first
 * n_poles table entries (plus mirrors and antibound poles). reflecting = 0
 * selects the absorbing initial wave, 1 the reflecting one. truncation
 * receives the magnitude of the last retained pole-term group. */
qtr_status qtr_psi_barrier(const qtr_poles* table, double x, double energy_ev, double t,
                           int n_poles, int reflecting, double* out_re, double* out_im,
                           double* truncation);

/* ------------------------------------------------------------------ */
/* Scenario records (the CLI front end drives everything through this) */

typedef struct qtr_scenario {
  int equation;      /* 0 schrodinger, 1 klein_gordon */
  int potential;     /* 0 free, 1 delta, 2 square */
  int initial;       /* 0 absorbing, 1 reflecting, 2 phase(alpha) */
  double alpha;      /* rad, in [0, 2 pi) */
  double energy_ev;  /* eV */
  double b_s;        /* eV A */
  double v0;         /* eV */
  double width;      /* A */
  int natural_units; /* nonzero: hbar = m = c = 1 */
} qtr_scenario;

/* Flat key=value scenario file; '#' starts a comment. */
qtr_status qtr_scenario_load(const char* path, qtr_scenario* out);
qtr_status qtr_scenario_validate(const qtr_scenario* sc);
/* 1 when an exact evaluator exists for the combination, else 0. */
int qtr_scenario_supported(const qtr_scenario* sc);
/* poles may be NULL except for square barriers. */
qtr_status qtr_scenario_eval(const qtr_scenario* sc, const qtr_poles* poles, double x,
                             double t, int n_poles, double* out_re, double* out_im);

/* ------------------------------------------------------------------ */
/* Finite-difference cross-validation propagators                      */

typedef struct qtr_grid {
  double x_min;  /* A, < 0 */
  double x_max;  /* A, > 0 */
  double dx;     /* A */
  double dt;     /* fs */
  long n_steps;
} qtr_grid;

/* Propagates the scenario on the grid and samples the wave at each probe
 * position every step. out must hold n_probes * (n_steps+1) * 2 doubles:
 * probe-major, one (re, im) pair per step. Dispatches on sc->equation. */
qtr_status qtr_oracle_propagate(const qtr_scenario* sc, const qtr_grid* grid,
                                const double* probes, int n_probes, double* out);

#ifdef __cplusplus
}
#endif

#endif /* QTRANSIENTS_H */
