// Command-line front end. Everything numerical goes through the public C API
// in qtransients.h; this file only does argument handling, scheduling and
// CSV/report formatting.
//
// Exit codes: 0 success, 2 usage/configuration error, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qtransients.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CliError {
  int code;
  std::string message;
};

void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

void fail_api(qtr_status st, const std::string& context) {
  const int code = (st == QTR_ERR_INVALID_ARGUMENT || st == QTR_ERR_UNSUPPORTED)
                       ? kExitUsage
                       : kExitNumerical;
  fail(code, context + ": " + qtr_last_error());
}

using ConstantsPtr = std::unique_ptr<qtr_constants, decltype(&qtr_constants_free)>;
using PolesPtr = std::unique_ptr<qtr_poles, decltype(&qtr_poles_free)>;

ConstantsPtr make_constants(bool natural) {
  return ConstantsPtr(natural ? qtr_constants_natural() : qtr_constants_default(),
                      &qtr_constants_free);
}

// 17 significant digits: lossless round trip, byte-stable across runs.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Sample {
  double coord;
  double re, im;
};

void write_csv(const std::string& path, const std::vector<Sample>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(kExitUsage, "cannot open output file '" + path + "'");
  out << "t_or_x,re_psi,im_psi,density\n";
  for (const Sample& s : rows) {
    const double density = s.re * s.re + s.im * s.im;
    out << fmt(s.coord) << ',' << fmt(s.re) << ',' << fmt(s.im) << ',' << fmt(density)
        << '\n';
  }
  if (!out) fail(kExitNumerical, "write failed for '" + path + "'");
}

qtr_scenario load_scenario(const std::string& path, bool natural_units_flag) {
  qtr_scenario sc;
  if (const qtr_status st = qtr_scenario_load(path.c_str(), &sc); st != QTR_OK)
    fail_api(st, "scenario '" + path + "'");
  if (natural_units_flag) sc.natural_units = 1;
  if (const qtr_status st = qtr_scenario_validate(&sc); st != QTR_OK)
    fail_api(st, "scenario '" + path + "'");
  if (!qtr_scenario_supported(&sc))
    fail(kExitUsage, "scenario combination has no exact solution");
  return sc;
}

PolesPtr poles_for(const qtr_scenario& sc, int n_poles) {
  if (sc.potential != 2) return PolesPtr(nullptr, &qtr_poles_free);
  ConstantsPtr pc = make_constants(sc.natural_units != 0);
  qtr_status st = QTR_OK;
  qtr_poles* raw = qtr_poles_create(pc.get(), sc.v0, sc.width, n_poles, &st);
  if (!raw || st != QTR_OK) fail_api(st, "pole table");
  return PolesPtr(raw, &qtr_poles_free);
}

// Evaluates the scenario over `coords`, concurrently, results in input order.
std::vector<Sample> eval_many(const qtr_scenario& sc, const qtr_poles* poles, int n_poles,
                              const std::vector<double>& coords, bool time_mode,
                              double fixed) {
  std::vector<Sample> rows(coords.size());
  std::vector<qtr_status> errs(coords.size(), QTR_OK);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min<std::size_t>(hw, coords.size());
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::size_t w = 0; w < n_threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < coords.size(); i += n_threads) {
        const double x = time_mode ? fixed : coords[i];
        const double t = time_mode ? coords[i] : fixed;
        double re = 0.0, im = 0.0;
        errs[i] = qtr_scenario_eval(&sc, poles, x, t, n_poles, &re, &im);
        rows[i] = Sample{coords[i], re, im};
      }
    });
  }
  for (auto& th : workers) th.join();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (errs[i] != QTR_OK) fail_api(errs[i], "evaluation at point " + fmt(coords[i]));
  return rows;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    v[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return v;
}

double density_at(const qtr_scenario& sc, const qtr_poles* poles, int n_poles, double x,
                  double t) {
  double re = 0.0, im = 0.0;
  if (const qtr_status st = qtr_scenario_eval(&sc, poles, x, t, n_poles, &re, &im);
      st != QTR_OK)
    fail_api(st, "evaluation");
  return re * re + im * im;
}

// ----------------------------------------------------------------- sweep --

int cmd_sweep(const std::string& scenario_path, bool natural, const std::string& mode,
              double x_fixed, double t_fixed, double lo, double hi, int steps,
              const std::string& out_path, int n_poles) {
  if (steps < 2) fail(kExitUsage, "--steps must be >= 2");
  if (!(lo < hi)) fail(kExitUsage, "range min must be < max");
  if (lo < 0.0) fail(kExitUsage, "range min must be >= 0");
  const bool time_mode = (mode == "time");
  if (!time_mode && mode != "space") fail(kExitUsage, "--mode must be 'time' or 'space'");
  const qtr_scenario sc = load_scenario(scenario_path, natural);
  PolesPtr poles = poles_for(sc, n_poles);
  const auto rows = eval_many(sc, poles.get(), n_poles, linspace(lo, hi, steps), time_mode,
                              time_mode ? x_fixed : t_fixed);
  write_csv(out_path, rows);
  return 0;
}

// --------------------------------------------------------------- figure1 --

int cmd_figure1(const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(kExitUsage, "cannot create output directory '" + out_dir + "'");

  qtr_scenario sc{};
  sc.equation = 0;
  sc.potential = 1;
  sc.initial = 0;
  sc.alpha = 0.0;
  sc.energy_ev = 0.01;
  sc.b_s = 2.0;
  sc.v0 = 0.0;
  sc.width = 0.0;
  sc.natural_units = 0;

  ConstantsPtr pc = make_constants(false);
  const double x = 0.3;
  const double t0 = x / qtr_constants_c(pc.get());

  // early window bracketing the light front, then a long window for the
  // classical-front region
  std::vector<double> times;
  for (const double t : linspace(0.0, 3.0 * t0, 601)) times.push_back(t);
  for (const double t : linspace(3.0 * t0, 0.7, 1400)) times.push_back(t);

  const auto rows_s = eval_many(sc, nullptr, 0, times, true, x);
  write_csv(out_dir + "/schrodinger_density.csv", rows_s);
  sc.equation = 1;
  const auto rows_r = eval_many(sc, nullptr, 0, times, true, x);
  write_csv(out_dir + "/klein_gordon_density.csv", rows_r);

  // summary quantities
  double k = 0.0, k_r = 0.0;
  if (qtr_kinematics(pc.get(), sc.energy_ev, &k, &k_r, nullptr) != QTR_OK)
    fail(kExitNumerical, qtr_last_error());
  double t_re = 0.0, t_im = 0.0, r_re = 0.0, r_im = 0.0;
  if (qtr_delta_amplitudes(pc.get(), sc.b_s, k, &t_re, &t_im, &r_re, &r_im) != QTR_OK)
    fail(kExitNumerical, qtr_last_error());
  double co[8];
  if (qtr_kg_delta_coefficients(pc.get(), sc.energy_ev, sc.b_s, co) != QTR_OK)
    fail(kExitNumerical, qtr_last_error());

  double fr_re = 0.0, fr_im = 0.0;
  if (qtr_kg_delta(pc.get(), x, sc.energy_ev, t0 * (1.0 + 1e-9), sc.b_s, &fr_re, &fr_im) !=
      QTR_OK)
    fail(kExitNumerical, qtr_last_error());

  std::ofstream summary(out_dir + "/summary.txt", std::ios::binary);
  summary << "x = " << fmt(x) << " A\n"
          << "front_time = " << fmt(t0) << " fs\n"
          << "front_height = " << fmt(fr_re * fr_re + fr_im * fr_im) << "\n"
          << "schrodinger_plateau = " << fmt(t_re * t_re + t_im * t_im) << "\n"
          << "klein_gordon_plateau = " << fmt(co[0] * co[0] + co[1] * co[1]) << "\n";
  std::cout << "front_time " << fmt(t0) << "\nfront_height "
            << fmt(fr_re * fr_re + fr_im * fr_im) << "\nschrodinger_plateau "
            << fmt(t_re * t_re + t_im * t_im) << "\nklein_gordon_plateau "
            << fmt(co[0] * co[0] + co[1] * co[1]) << "\n";
  return 0;
}

// ----------------------------------------------------------------- poles --

int cmd_poles(double v0, double width, int n_max, const std::string& out_path,
              bool natural) {
  ConstantsPtr pc = make_constants(natural);
  qtr_status st = QTR_OK;
  PolesPtr poles(qtr_poles_create(pc.get(), v0, width, n_max, &st), &qtr_poles_free);
  if (!poles || st != QTR_OK) fail_api(st, "pole search");

  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(kExitUsage, "cannot open output file '" + out_path + "'");
  out << "n,re_k,im_k,re_u0uL,im_u0uL,residual\n";
  const int n = qtr_poles_count(poles.get());
  for (int i = 0; i < n; ++i) {
    double kr = 0.0, ki = 0.0, ur = 0.0, ui = 0.0, res = 0.0;
    if (qtr_poles_get(poles.get(), i, &kr, &ki, &ur, &ui, &res) != QTR_OK)
      fail(kExitNumerical, qtr_last_error());
    out << (i + 1) << ',' << fmt(kr) << ',' << fmt(ki) << ',' << fmt(ur) << ',' << fmt(ui)
        << ',' << fmt(res) << '\n';
  }
  std::cout << "poles " << n << " antibound " << qtr_poles_antibound_count(poles.get())
            << "\n";
  return 0;
}

// --------------------------------------------------------------- compare --

double tolerance_for(const qtr_scenario& sc) {
  if (sc.equation == 0) return sc.potential == 2 ? 2e-2 : 1e-2;
  return sc.potential == 1 ? 5e-2 : 3e-2;  // leapfrog; narrow-barrier delta is looser
}

int cmd_compare(const std::string& scenario_path, bool natural, double x_min, double x_max,
                double dx, double dt, long n_steps, std::vector<double> probes,
                int n_poles, const std::string& dump_dir) {
  const qtr_scenario sc = load_scenario(scenario_path, natural);
  if (probes.empty()) probes = {0.3, 0.6};
  qtr_grid grid{x_min, x_max, dx, dt, n_steps};

  const std::size_t per_probe = static_cast<std::size_t>(n_steps) + 1;
  std::vector<double> oracle(probes.size() * per_probe * 2);
  if (const qtr_status st = qtr_oracle_propagate(&sc, &grid, probes.data(),
                                                 static_cast<int>(probes.size()),
                                                 oracle.data());
      st != QTR_OK)
    fail_api(st, "oracle propagation");

  PolesPtr poles = poles_for(sc, n_poles);
  const double tol = tolerance_for(sc);
  bool all_ok = true;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    std::vector<double> times(per_probe);
    for (std::size_t i = 0; i < per_probe; ++i) times[i] = static_cast<double>(i) * dt;
    const auto analytic = eval_many(sc, poles.get(), n_poles, times, true, probes[p]);
    double num = 0.0, den = 0.0;
    std::vector<Sample> oracle_rows(per_probe);
    for (std::size_t i = 0; i < per_probe; ++i) {
      const double oro = oracle[2 * (p * per_probe + i)];
      const double oio = oracle[2 * (p * per_probe + i) + 1];
      const double dre = analytic[i].re - oro;
      const double dim = analytic[i].im - oio;
      num += dre * dre + dim * dim;
      den += analytic[i].re * analytic[i].re + analytic[i].im * analytic[i].im;
      oracle_rows[i] = Sample{times[i], oro, oio};
    }
    const double err = std::sqrt(num / std::max(den, 1e-300));
    const bool ok = err < tol;
    all_ok = all_ok && ok;
    std::cout << "probe " << fmt(probes[p]) << " rel_l2 " << fmt(err) << " tol "
              << fmt(tol) << (ok ? " PASS" : " FAIL") << "\n";
    if (!dump_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(dump_dir, ec);
      const std::string tag = std::to_string(p);
      write_csv(dump_dir + "/analytic_probe" + tag + ".csv", analytic);
      write_csv(dump_dir + "/oracle_probe" + tag + ".csv", oracle_rows);
    }
  }
  if (!all_ok) fail(kExitNumerical, "analytic/oracle disagreement above tolerance");
  return 0;
}

// ----------------------------------------------------------------- front --

int cmd_front(const std::string& scenario_path, bool natural, double x, double threshold,
              double t_min, double t_max, int scan_steps, int n_poles) {
  if (!(threshold > 0.0)) fail(kExitUsage, "--threshold must be > 0");
  if (!(t_min >= 0.0) || !(t_max > t_min)) fail(kExitUsage, "need 0 <= t-min < t-max");
  const qtr_scenario sc = load_scenario(scenario_path, natural);
  PolesPtr poles = poles_for(sc, n_poles);

  // coarse scan for the first bracket, then bisection onto the crossing
  double t_prev = t_min;
  double d_prev = density_at(sc, poles.get(), n_poles, x, t_min);
  double lo = -1.0, hi = -1.0;
  for (int i = 1; i <= scan_steps; ++i) {
    const double t = t_min + (t_max - t_min) * static_cast<double>(i) /
                                 static_cast<double>(scan_steps);
    const double d = density_at(sc, poles.get(), n_poles, x, t);
    if (d_prev < threshold && d >= threshold) {
      lo = t_prev;
      hi = t;
      break;
    }
    t_prev = t;
    d_prev = d;
  }
  if (hi < 0.0) fail(kExitNumerical, "density never crosses the threshold in the window");
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (density_at(sc, poles.get(), n_poles, x, mid) >= threshold)
      hi = mid;
    else
      lo = mid;
  }
  std::cout << "first_crossing " << fmt(hi) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact transient transmitted waves for shutter/tunneling problems"};
  app.require_subcommand(1);

  std::string scenario_path, out_path = "sweep.csv", out_dir = "figure1_out", mode = "time";
  std::string dump_dir;
  bool natural = false;
  double x_fixed = 0.3, t_fixed = 0.0, lo = 0.0, hi = 1.0;
  int steps = 100, n_poles = 24, n_max = 16, scan_steps = 4096;
  double v0 = 1.0, width = 5.0, threshold = 1e-6, t_min = 0.0, t_max = 1.0;
  double g_xmin = -40.0, g_xmax = 20.0, g_dx = 0.004, g_dt = 5e-4;
  long g_steps = 2000;
  std::vector<double> probes;

  auto* sweep = app.add_subcommand("sweep", "evaluate a scenario on a 1-D grid, emit CSV");
  sweep->add_option("--scenario", scenario_path, "scenario file")->required();
  sweep->add_option("--mode", mode, "'time' (density vs t at --x) or 'space' (vs x at --t)");
  sweep->add_option("--x", x_fixed, "fixed position, A (time mode)");
  sweep->add_option("--t", t_fixed, "fixed time, fs (space mode)");
  sweep->add_option("--t-min", lo, "range start");
  sweep->add_option("--t-max", hi, "range end");
  sweep->add_option("--steps", steps, "number of samples");
  sweep->add_option("--out", out_path, "output CSV path");
  sweep->add_option("--n-poles", n_poles, "pole count for square barriers");
  sweep->add_flag("--natural-units", natural, "hbar = m = c = 1");

  auto* fig = app.add_subcommand("figure1", "delta-barrier density vs time, both equations");
  fig->add_option("--out", out_dir, "output directory");

  auto* pol = app.add_subcommand("poles", "square-barrier S-matrix pole table");
  pol->add_option("--v0", v0, "barrier height, eV")->required();
  pol->add_option("--width", width, "barrier width, A")->required();
  pol->add_option("--n-poles", n_max, "number of poles");
  pol->add_option("--out", out_path, "output CSV path")->required();
  pol->add_flag("--natural-units", natural);

  auto* cmp = app.add_subcommand("compare", "analytic vs finite-difference propagation");
  cmp->add_option("--scenario", scenario_path, "scenario file")->required();
  cmp->add_option("--x-min", g_xmin, "grid left edge, A");
  cmp->add_option("--x-max", g_xmax, "grid right edge, A");
  cmp->add_option("--dx", g_dx, "grid spacing, A");
  cmp->add_option("--dt", g_dt, "time step, fs");
  cmp->add_option("--steps", g_steps, "number of time steps");
  cmp->add_option("--probes", probes, "probe positions, A");
  cmp->add_option("--n-poles", n_poles, "pole count for square barriers");
  cmp->add_option("--dump-dir", dump_dir, "write probe series CSVs here");
  cmp->add_flag("--natural-units", natural);

  auto* frn = app.add_subcommand("front", "first time the density exceeds a threshold");
  frn->add_option("--scenario", scenario_path, "scenario file")->required();
  frn->add_option("--x", x_fixed, "position, A")->required();
  frn->add_option("--threshold", threshold, "density threshold")->required();
  frn->add_option("--t-min", t_min, "window start, fs");
  frn->add_option("--t-max", t_max, "window end, fs");
  frn->add_option("--scan-steps", scan_steps, "coarse scan resolution");
  frn->add_option("--n-poles", n_poles, "pole count for square barriers");
  frn->add_flag("--natural-units", natural);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (sweep->parsed())
      return cmd_sweep(scenario_path, natural, mode, x_fixed, t_fixed, lo, hi, steps,
                       out_path, n_poles);
    if (fig->parsed()) return cmd_figure1(out_dir);
    if (pol->parsed()) return cmd_poles(v0, width, n_max, out_path, natural);
    if (cmp->parsed())
      return cmd_compare(scenario_path, natural, g_xmin, g_xmax, g_dx, g_dt, g_steps,
                         probes, n_poles, dump_dir);
    if (frn->parsed())
      return cmd_front(scenario_path, natural, x_fixed, threshold, t_min, t_max,
                       scan_steps, n_poles);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
