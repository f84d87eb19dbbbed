#include "tgftflow/equilibrium.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

namespace tgftflow {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPi2 = kPi * kPi;
constexpr double kPi4 = kPi2 * kPi2;

double eq_omega(double msq, double lam) {
  return (msq + 1.0) * (msq + 1.0) - kPi2 * lam;
}

double eta_truncation(double msq, double lam) {
  const double u = 1.0 + msq;
  const double num = 4.0 * lam * kPi2 * (u * u - lam * kPi2 * (2.0 + msq));
  const double den =
      u * u * eq_omega(msq, lam) + (2.0 / 3.0) * (2.0 + msq) * lam * lam * kPi4;
  if (den == 0.0)
    throw SingularEta("eq_beta_truncation: eta denominator vanished");
  return num / den;
}

double eta_constrained(double msq, double lam) {
  const double u = 1.0 + msq;
  const double u3 = u * u * u;
  const double omega1 = 1.2 * kPi2 * lam - 4.0 * kPi4 * lam * lam / u3 -
                        2.4 * kPi2 * lam * msq / u - 0.8 * kPi2 * lam / u;
  const double den = u * u - omega1;
  if (den == 0.0)
    throw SingularEta("eq_beta_constrained: eta denominator vanished");
  return 4.0 * kPi2 * lam * (kPi2 * lam / (5.0 * u3) + 1.0) / den;
}

double beta_msq_closed(double msq, double lam, double eta) {
  const double u = 1.0 + msq;
  return -(2.0 + eta) * msq -
         10.0 * lam * kPi2 / (u * u) * (1.0 + eta / 6.0);
}
}  // namespace

EqBeta eq_beta_truncation(const EqState& state) {
  const double msq = state.msq, lam = state.lam;
  const double u = 1.0 + msq;
  const double eta = eta_truncation(msq, lam);
  EqBeta b;
  b.eta = eta;
  b.beta_msq = beta_msq_closed(msq, lam, eta);
  b.beta_lam = -2.0 * eta * lam +
               4.0 * lam * lam * kPi2 / (u * u * u) * (1.0 + eta / 6.0) *
                   (1.0 - 6.0 * kPi2 * lam * (1.0 / (u * u) + 1.0 + 1.0 / u));
  return b;
}

EqBeta eq_beta_constrained(const EqState& state) {
  const double msq = state.msq, lam = state.lam;
  const double u = 1.0 + msq;
  const double eta = eta_constrained(msq, lam);
  EqBeta b;
  b.eta = eta;
  b.beta_msq = beta_msq_closed(msq, lam, eta);
  // beta_lam from the exact Ward relation
  //   beta_lam + eta lam Omega/u^2 - 2 pi^2 lam^2 beta_msq / u^3 = 0.
  b.beta_lam = -eta * lam * eq_omega(msq, lam) / (u * u) +
               2.0 * kPi2 * lam * lam * b.beta_msq / (u * u * u);
  b.constraint_residual =
      b.beta_lam + eta * lam * eq_omega(msq, lam) / (u * u) -
      2.0 * kPi2 * lam * lam * b.beta_msq / (u * u * u);
  return b;
}

namespace {

// Inner 4-fold lattice sums via the exponential representation
//   1/(b + A)   = Int_0^inf e^{-(b+A) t} dt,
//   1/(b + A)^2 = Int_0^inf t e^{-(b+A) t} dt,
// which turns the sum over q in [-L, L]^4 into a 1-D integral of the 4th
// power of a single-axis sum.  Exact up to quadrature tolerance and cheap
// for any cutoff.
struct LatticeSummer {
  const std::vector<double>& c;  // c[q] = q^2 + sigma_r(q^2), q = 0..L

  // h(t) = (sum_q m(q) e^{-c_q t})^4 with multiplicity m = 2 - delta_{q0}.
  double axis(double t) const {
    double s = std::exp(-c[0] * t);
    for (std::size_t q = 1; q < c.size(); ++q)
      s += 2.0 * std::exp(-c[q] * t);
    return s;
  }

  // Int_0^inf w(t) e^{-b t} axis(t)^4 dt by adaptive Simpson on a
  // compactified axis t = u/(1-u).
  template <typename W>
  double integral(double b, W weight) const {
    auto f = [&](double u) {
      const double om = 1.0 - u;
      if (om <= 0.0) return 0.0;
      const double t = u / om;
      const double a = axis(t);
      return weight(t) * std::exp(-b * t) * a * a * a * a / (om * om);
    };
    // depth-limited adaptive Simpson, deterministic
    std::function<double(double, double, double, double, double, double, int)>
        simp = [&](double a0, double b0, double fa, double fm, double fb,
                   double whole, int depth) -> double {
      const double m = 0.5 * (a0 + b0);
      const double lm = 0.5 * (a0 + m), rm = 0.5 * (m + b0);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a0) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b0 - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || std::abs(left + right - whole) < 1e-13 * (1.0 + std::abs(whole)))
        return left + right + (left + right - whole) / 15.0;
      return simp(a0, m, fa, flm, fm, left, depth - 1) +
             simp(m, b0, fm, frm, fb, right, depth - 1);
    };
    double total = 0.0;
    const double breaks[] = {0.0, 0.1, 0.3, 0.6, 0.9, 1.0 - 1e-12};
    for (int i = 0; i + 1 < 6; ++i) {
      const double a0 = breaks[i], b0 = breaks[i + 1];
      const double fa = f(a0), fb = f(b0), fm = f(0.5 * (a0 + b0));
      const double whole = (b0 - a0) / 6.0 * (fa + 4.0 * fm + fb);
      total += simp(a0, b0, fa, fm, fb, whole, 48);
    }
    return total;
  }

  double sum_inverse(double b) const {
    return integral(b, [](double) { return 1.0; });
  }
  double sum_inverse_sq(double b) const {
    return integral(b, [](double t) { return t; });
  }
};

}  // namespace

SDSolution sd_solve_sigma(double lam_r, int cutoff, double damping,
                          double m_rsq) {
  if (cutoff < 5) throw CutoffTooSmall("sd_solve_sigma: cutoff must be >= 5");
  if (cutoff > 100) throw DomainError("sd_solve_sigma: cutoff must be <= 100");
  if (damping <= 0.0 || damping > 1.0)
    throw DomainError("sd_solve_sigma: damping must be in (0, 1]");
  if (m_rsq <= 0.0) throw DomainError("sd_solve_sigma: m_rsq must be > 0");

  const int n = cutoff + 1;
  std::vector<double> sigma(n, 0.0);
  SDSolution sol;
  sol.cutoff = cutoff;
  sol.lam_r = lam_r;
  sol.m_rsq = m_rsq;

  const int max_sweeps = 500;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    std::vector<double> c(n);
    for (int q = 0; q < n; ++q)
      c[q] = static_cast<double>(q) * q + sigma[q];
    LatticeSummer ls{c};

    // Raw update: S(p^2) = -2 lam_r * sum_{q in [-L,L]^4} G(p, q).
    std::vector<double> raw(n);
    for (int p = 0; p < n; ++p) {
      const double b = static_cast<double>(p) * p + sigma[p] + m_rsq;
      raw[p] = -2.0 * lam_r * ls.sum_inverse(b);
    }
    // Re-impose renormalization: subtract value and discrete slope at 0.
    const double slope = raw[1] - raw[0];
    std::vector<double> next(n);
    double delta = 0.0;
    for (int p = 0; p < n; ++p) {
      const double renorm = raw[p] - raw[0] -
                            slope * static_cast<double>(p) * p;
      const double updated = (1.0 - damping) * sigma[p] + damping * renorm;
      delta = std::max(delta, std::abs(updated - sigma[p]));
      next[p] = updated;
    }
    sigma = next;
    if (!std::isfinite(delta) || delta > 1e6)
      throw IterationDiverged("sd_solve_sigma: update diverged");
    if (delta < 1e-10) break;
  }
  if (sweep == max_sweeps)
    throw IterationDiverged("sd_solve_sigma: sweep budget exhausted");

  sol.sigma_r = sigma;
  sol.sweeps = sweep + 1;

  // A_infty = sum over the 4-D cutoff lattice of the squared renormalized
  // propagator at zero transverse momentum.
  std::vector<double> c(n);
  for (int q = 0; q < n; ++q)
    c[q] = static_cast<double>(q) * q + sigma[q];
  LatticeSummer ls{c};
  sol.a_infty = ls.sum_inverse_sq(m_rsq);

  sol.z_lambda = 1.0 / (1.0 - 2.0 * lam_r * sol.a_infty);
  sol.z_infty = 1.0 + 2.0 * sol.z_lambda * lam_r * sol.a_infty;
  return sol;
}

SDRenormalization sd_renormalization_factors(const SDSolution& sol) {
  SDRenormalization r;
  r.z_lambda = 1.0 / (1.0 - 2.0 * sol.lam_r * sol.a_infty);
  r.z_infty = 1.0 + 2.0 * r.z_lambda * sol.lam_r * sol.a_infty;
  r.identity_residual = std::abs(r.z_infty - r.z_lambda);
  return r;
}

}  // namespace tgftflow
