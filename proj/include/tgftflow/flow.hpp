#pragma once

#include "tgftflow/thresholds.hpp"
#include "tgftflow/types.hpp"

namespace tgftflow {

struct EtaSolution {
  double eta = 0.0;
  double numerator = 0.0;
  double denominator = 1.0;
  bool singular = false;  // denominator at or below the floor
};

struct BetaVector {
  double beta_msq = 0.0;
  double beta_lam = 0.0;
  double eta = 0.0;
  double kappa_bar = 0.0;  // sixtic coupling slaved to lam
  double lam_prime = 0.0;  // momentum derivative of the effective vertex
};

struct FlowOptions {
  int mu2_x_power = 2;     // power of x in mu2's theta term (2 as printed)
  bool use_cache = true;
  double eta_floor = 1e-6; // denominator floor below which eta is singular
  double threshold_scale = 1.0;  // uniform constant injected into all
                                 // thresholds (measure-covariance tests)
};

/// Scale every threshold component by a constant c (covariance tests:
/// physical outputs are invariant under thresholds*c with lam -> lam/c).
ThresholdSet scale_thresholds(const ThresholdSet& ts, double c);

/// Momentum derivative of the effective 4-point vertex at zero momenta:
/// lam' = (2 lam^2/3) I1 + 8 lam^2 (W1 + W2).  eta-independent.
double lambda_prime(const FlowState& state, const ThresholdSet& ts);

/// Sixtic coupling from the vertex-expansion structure equation:
/// kappa_bar = (4 lam^3 / 3 pi) I1.
double kappa_bar(const FlowState& state, const ThresholdSet& ts);

/// Solve the linear self-consistency for the anomalous dimension:
///   eta = -(lam' dL.c0 + lam dD.c0) / (1 + lam' dL.c1 + lam dD.c1),
/// dL = L21 - L22, dD = D21 - D22.  Never throws: the singular flag marks
/// denominators at or below the floor and the caller decides.
EtaSolution solve_eta(const FlowState& state, const ThresholdSet& ts,
                      double floor = 1e-6);

/// Full beta functions at a state (d = 5 colors hard-coded):
///   beta_msq = -(2+eta) msq - 5 lam (L21 - L22)
///   beta_lam = -2 eta lam - (3/2) kappa_bar (L21-L22)
///              + (16 lam^2/pi)(L31 + L32/2 - L33)
/// Throws SingularEta when the eta denominator is at or below the floor;
/// propagates NonConvergence from quadrature.
BetaVector beta_functions(const FlowState& state, const RegulatorParams& params,
                          const QuadratureSpec& spec,
                          const FlowOptions& opts = {});

/// Same, from a precomputed ThresholdSet (threshold_scale not re-applied).
BetaVector beta_functions_from(const FlowState& state, const ThresholdSet& ts,
                               double eta_floor = 1e-6);

/// True iff the eta denominator is positive at the state (physical region).
bool eta_denominator_sign(const FlowState& state, const RegulatorParams& params,
                          const QuadratureSpec& spec,
                          const FlowOptions& opts = {});

/// Small-coupling coefficients at (0,0): beta_lam = a0 lam^2 + ...,
/// beta_msq = -2 msq + b0 lam + ...  b0 by central difference (step 1e-4),
/// a0 by a 3-point fit at lam in {h, 2h, 3h}, h = 1e-3, Richardson-checked.
std::pair<double, double> gaussian_coefficients(const RegulatorParams& params,
                                                const QuadratureSpec& spec,
                                                const FlowOptions& opts = {});

}  // namespace tgftflow
