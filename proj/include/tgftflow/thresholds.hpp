#pragma once

#include "tgftflow/quadrature.hpp"
#include "tgftflow/types.hpp"

namespace tgftflow {

/// All threshold integrals entering the flow at fixed (msq; alpha, beta_hat).
/// The mu-carrying integrals are eta-affine pairs (built from evaluations at
/// eta = 0 and eta = 1); I1 and the Ward loops W1, W2 are eta-independent.
/// None of them depends on the quartic coupling.
struct ThresholdSet {
  AffinePair L21, L22;   // 2-point loops (prefactor 2/pi)
  AffinePair D21, D22;   // d/d(external momentum^2) of L21, L22 at zero
  AffinePair L31, L32, L33;  // 4-point loops
  double I1 = 0.0;       // sixtic-coupling structure loop, x in [0, inf)
  double W1 = 0.0;       // Ward loop, Z_inf/Z -> 0 limit
  double W2 = 0.0;       // Ward loop, frequency-regulator part
  double msq = 0.0;
  RegulatorParams params;
};

/// Compute the full threshold set by nested adaptive quadrature.
/// external_shift displaces the x-argument of the 2-point integrands by a
/// (used by the finite-difference derivative oracle); the flow uses 0.
ThresholdSet threshold_set(double msq, const RegulatorParams& params,
                           const QuadratureSpec& spec, int mu2_x_power = 2);

/// L21/L22 alone at external squared momentum a (integrand x-argument
/// shifted by a), for the finite-difference check of the derivative pairs.
std::pair<AffinePair, AffinePair> two_point_loops_shifted(
    double msq, const RegulatorParams& params, const QuadratureSpec& spec,
    double a, int mu2_x_power = 2);

/// Derivative pairs via the reduced identity
///   dL/da|_0 = -(2/pi) * pi^2 * Int dy Int_0^1 g(s, y) ds
/// (one radial power fewer than the loop itself).
std::pair<AffinePair, AffinePair> derivative_pair(double msq,
                                                  const RegulatorParams& params,
                                                  const QuadratureSpec& spec,
                                                  int mu2_x_power = 2);

/// Memoized threshold_set keyed on exact bits of (msq, params, spec,
/// mu2_x_power).  Thread-safe; identical keys return identical values.
ThresholdSet cached_thresholds(double msq, const RegulatorParams& params,
                               const QuadratureSpec& spec, int mu2_x_power = 2);

/// Number of entries currently memoized (test hook).
std::size_t threshold_cache_size();
void clear_threshold_cache();

}  // namespace tgftflow
