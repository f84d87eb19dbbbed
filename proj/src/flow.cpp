#include "tgftflow/flow.hpp"

#include <cmath>

namespace tgftflow {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kColors = 5;  // rank of the model, fixed

ThresholdSet get_thresholds(double msq, const RegulatorParams& params,
                            const QuadratureSpec& spec,
                            const FlowOptions& opts) {
  ThresholdSet ts = opts.use_cache
                        ? cached_thresholds(msq, params, spec, opts.mu2_x_power)
                        : threshold_set(msq, params, spec, opts.mu2_x_power);
  if (opts.threshold_scale != 1.0)
    ts = scale_thresholds(ts, opts.threshold_scale);
  return ts;
}
}  // namespace

ThresholdSet scale_thresholds(const ThresholdSet& ts, double c) {
  ThresholdSet s = ts;
  s.L21 = ts.L21 * c;
  s.L22 = ts.L22 * c;
  s.D21 = ts.D21 * c;
  s.D22 = ts.D22 * c;
  s.L31 = ts.L31 * c;
  s.L32 = ts.L32 * c;
  s.L33 = ts.L33 * c;
  s.I1 = c * ts.I1;
  s.W1 = c * ts.W1;
  s.W2 = c * ts.W2;
  return s;
}

double lambda_prime(const FlowState& state, const ThresholdSet& ts) {
  const double l2 = state.lam * state.lam;
  return (2.0 / 3.0) * l2 * ts.I1 + 8.0 * l2 * (ts.W1 + ts.W2);
}

double kappa_bar(const FlowState& state, const ThresholdSet& ts) {
  return (4.0 / (3.0 * kPi)) * state.lam * state.lam * state.lam * ts.I1;
}

EtaSolution solve_eta(const FlowState& state, const ThresholdSet& ts,
                      double floor) {
  const double lp = lambda_prime(state, ts);
  const AffinePair dL = ts.L21 - ts.L22;
  const AffinePair dD = ts.D21 - ts.D22;
  EtaSolution sol;
  sol.numerator = -(lp * dL.c0.real() + state.lam * dD.c0.real());
  sol.denominator = 1.0 + lp * dL.c1.real() + state.lam * dD.c1.real();
  sol.singular = sol.denominator <= floor;
  sol.eta = sol.singular ? 0.0 : sol.numerator / sol.denominator;
  return sol;
}

BetaVector beta_functions_from(const FlowState& state, const ThresholdSet& ts,
                               double eta_floor) {
  const EtaSolution es = solve_eta(state, ts, eta_floor);
  if (es.singular)
    throw SingularEta("beta_functions: eta denominator at or below floor");
  const double eta = es.eta;
  const double lam = state.lam;
  const double dL = (ts.L21 - ts.L22).at(eta).real();
  const double kb = kappa_bar(state, ts);
  const double l3 = ts.L31.at(eta).real() + 0.5 * ts.L32.at(eta).real() -
                    ts.L33.at(eta).real();
  BetaVector b;
  b.eta = eta;
  b.kappa_bar = kb;
  b.lam_prime = lambda_prime(state, ts);
  b.beta_msq = -(2.0 + eta) * state.msq - kColors * lam * dL;
  b.beta_lam = -2.0 * eta * lam - 1.5 * kb * dL + (16.0 * lam * lam / kPi) * l3;
  return b;
}

BetaVector beta_functions(const FlowState& state, const RegulatorParams& params,
                          const QuadratureSpec& spec, const FlowOptions& opts) {
  if (state.msq <= -1.0)
    throw DomainError("beta_functions: msq must exceed -1");
  const ThresholdSet ts = get_thresholds(state.msq, params, spec, opts);
  FlowState scaled = state;
  scaled.lam = state.lam;  // thresholds are lam-independent by construction
  return beta_functions_from(scaled, ts, opts.eta_floor);
}

bool eta_denominator_sign(const FlowState& state, const RegulatorParams& params,
                          const QuadratureSpec& spec, const FlowOptions& opts) {
  const ThresholdSet ts = get_thresholds(state.msq, params, spec, opts);
  return solve_eta(state, ts, 0.0).denominator > 0.0;
}

std::pair<double, double> gaussian_coefficients(const RegulatorParams& params,
                                                const QuadratureSpec& spec,
                                                const FlowOptions& opts) {
  const ThresholdSet ts = get_thresholds(0.0, params, spec, opts);
  auto beta_at = [&](double lam) {
    return beta_functions_from({0.0, lam}, ts, opts.eta_floor);
  };

  const double hb = 1e-4;
  const double b0 =
      (beta_at(hb).beta_msq - beta_at(-hb).beta_msq) / (2.0 * hb);

  // beta_lam(0, l) = a0 l^2 + c3 l^3 + c4 l^4: solve the 3x3 system.
  auto fit_a0 = [&](double h) {
    double l[3] = {h, 2.0 * h, 3.0 * h};
    double f[3];
    for (int i = 0; i < 3; ++i) f[i] = beta_at(l[i]).beta_lam;
    // Gaussian elimination on the Vandermonde-like system in (a0, c3, c4).
    double A[3][4];
    for (int i = 0; i < 3; ++i) {
      A[i][0] = l[i] * l[i];
      A[i][1] = A[i][0] * l[i];
      A[i][2] = A[i][1] * l[i];
      A[i][3] = f[i];
    }
    for (int k = 0; k < 2; ++k)
      for (int i = k + 1; i < 3; ++i) {
        const double m = A[i][k] / A[k][k];
        for (int j = k; j < 4; ++j) A[i][j] -= m * A[k][j];
      }
    const double c4 = A[2][3] / A[2][2];
    const double c3 = (A[1][3] - A[1][2] * c4) / A[1][1];
    return (A[0][3] - A[0][1] * c3 - A[0][2] * c4) / A[0][0];
  };
  const double a0 = fit_a0(1e-3);
  const double a0_check = fit_a0(5e-4);  // Richardson-style halved-step check
  if (std::abs(a0 - a0_check) > 1e-3 * std::max(1.0, std::abs(a0)))
    throw NonConvergence("gaussian_coefficients: a0 fit not step-stable");
  return {a0, b0};
}

}  // namespace tgftflow
