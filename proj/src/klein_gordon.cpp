#include "klein_gordon.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bessel.hpp"

namespace qtr {
namespace {

using cplx = std::complex<double>;

// E_q on the branch continuous with real q; validates the supported set.
double energy_of_branch(cplx q, const PhysicalConstants& pc) {
  if (q.imag() == 0.0) return std::hypot(q.real(), pc.mu);
  if (q.real() == 0.0 && q.imag() < 0.0 && -q.imag() < pc.mu) {
    const double b0 = -q.imag();
    return std::sqrt((pc.mu - b0) * (pc.mu + b0));
  }
  throw std::domain_error("kg_free: effective_q must be real or -i b0 with b0 < mu");
}

long truncation_order(double eta, double ratio, double tol) {
  const double n_bessel = eta + 14.0 * std::cbrt(eta) + 40.0;
  double n = n_bessel;
  if (ratio < 0.999) {
    const double n_geo = std::log(tol * 0.01) / std::log(ratio);
    n = std::min(n, std::max(8.0, n_geo));
  }
  return static_cast<long>(n) + 1;
}

cplx kg_core(double x, double t, cplx q, double e_q, const PhysicalConstants& pc,
             const KgOptions& opt, KgSeriesDiag* diag) {
  const double ct = pc.c * t;
  if (ct <= x) return cplx(0.0, 0.0);

  const double xi = std::sqrt((ct + x) / (ct - x));
  const double eta = pc.mu * std::sqrt(ct - x) * std::sqrt(ct + x);
  const cplx z = (q + e_q) / pc.mu;
  const double az = std::abs(z);

  const bool converged_side = (xi >= az);  // at or ahead of the classical front
  const cplx v = converged_side ? cplx(z.imag(), -z.real()) / xi    // -i z / xi
                                : xi / (cplx(-z.imag(), z.real())); // xi / (i z)
  const double ratio = converged_side ? az / xi : xi / az;

  long n_max = truncation_order(eta, ratio, opt.tol);
  if (opt.max_terms > 0) n_max = opt.max_terms;

  std::vector<double> j(static_cast<std::size_t>(n_max) + 1);
  bessel_j_prefix(static_cast<int>(n_max), eta, j.data());

  cplx sum(0.0, 0.0);
  cplx vn(1.0, 0.0);
  long n = 0;
  for (; n <= n_max; ++n) {
    sum += vn * j[static_cast<std::size_t>(n)];
    vn *= v;
    if (std::abs(vn.real()) + std::abs(vn.imag()) < 1e-305) break;
  }
  if (diag) {
    diag->terms = std::min(n + 1, n_max + 1);
    const double jn = std::abs(j[static_cast<std::size_t>(n_max)]);
    diag->tail_bound = (ratio < 1.0) ? std::abs(vn) * std::max(jn, 1e-300) / (1.0 - ratio)
                                     : std::abs(vn) * jn * 8.0;
  }

  const double half_j0 = 0.5 * j[0];
  if (converged_side) return cplx(half_j0, 0.0) + (sum - j[0]);
  // e^{i(qx - E_q ct)}; |e^{iqx}| = e^{b0 x} stays O(1) for the uses here
  const cplx iph = cplx(0.0, 1.0) * (q * x - e_q * ct);
  const cplx plane = std::exp(iph);
  return plane + cplx(half_j0, 0.0) - sum;
}

}  // namespace

KgSeriesParams kg_series_params(double x, double t, cplx q, const PhysicalConstants& pc) {
  const double ct = pc.c * t;
  if (!(ct > x)) throw std::domain_error("kg_series_params: requires ct > x");
  const double e_q = energy_of_branch(q, pc);
  return KgSeriesParams{std::sqrt((ct + x) / (ct - x)),
                        pc.mu * std::sqrt(ct - x) * std::sqrt(ct + x), (q + e_q) / pc.mu};
}

cplx kg_free(double x, const Kinematics& kin, double t, const PhysicalConstants& pc,
             cplx effective_q, const KgOptions& opt, KgSeriesDiag* diag) {
  (void)kin;
  if (!(x > 0.0)) throw std::invalid_argument("kg_free: x must be > 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("kg_free: t must be >= 0");
  const double e_q = energy_of_branch(effective_q, pc);
  return kg_core(x, t, effective_q, e_q, pc, opt, diag);
}

cplx kg_free(double x, const Kinematics& kin, double t, const PhysicalConstants& pc) {
  return kg_free(x, kin, t, pc, cplx(kin.k_r, 0.0));
}

cplx kg_free_phase(double x, const Kinematics& kin, double t, double alpha,
                   const PhysicalConstants& pc, const KgOptions& opt) {
  const cplx plus = kg_free(x, kin, t, pc, cplx(kin.k_r, 0.0), opt);
  const cplx minus = kg_free(x, kin, t, pc, cplx(-kin.k_r, 0.0), opt);
  if (plus == cplx(0.0, 0.0) && minus == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
  return plus + cplx(std::cos(alpha), std::sin(alpha)) * minus;
}

KgDeltaCoefficients KgDeltaCoefficients::make(double b0, const Kinematics& kin,
                                              const PhysicalConstants& pc) {
  if (!std::isfinite(b0) || b0 < 0.0)
    throw std::invalid_argument("KgDeltaCoefficients: b0 must be >= 0");
  if (b0 >= pc.mu)
    throw std::domain_error("KgDeltaCoefficients: b0 >= mu, eps would be imaginary");
  const double eps = std::sqrt((pc.mu - b0) * (pc.mu + b0));
  const cplx denom(kin.k_r, b0);
  KgDeltaCoefficients co;
  co.b0 = b0;
  co.eps = eps;
  co.a = kin.k_r / denom;
  co.b = cplx(0.0, b0) / denom;
  co.c = cplx((eps + kin.e_r) / (2.0 * eps), 0.0);
  co.d = cplx((eps - kin.e_r) / (2.0 * eps), 0.0);
  return co;
}

cplx kg_delta(double x, const Kinematics& kin, double t, const KgDeltaCoefficients& coeffs,
              const PhysicalConstants& pc, const KgOptions& opt) {
  if (!(x > 0.0)) throw std::invalid_argument("kg_delta: x must be > 0");
  if (pc.c * t <= x) return cplx(0.0, 0.0);
  const cplx psi_k = kg_free(x, kin, t, pc, cplx(kin.k_r, 0.0), opt);
  const cplx psi_b = kg_free(x, kin, t, pc, cplx(0.0, -coeffs.b0), opt);
  return coeffs.a * psi_k + coeffs.b * coeffs.c * psi_b +
         coeffs.b * coeffs.d * std::conj(psi_b);
}

}  // namespace qtr
