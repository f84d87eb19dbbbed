#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tgftflow/types.hpp"

namespace tgftflow {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double y_map_scale = 1.0;            // scale of the rational frequency map
  std::vector<double> x_split = {1.0}; // mandatory radial breakpoints
  long long max_evals = 10'000'000;

  bool operator==(const QuadratureSpec&) const = default;
};

struct IntegralResult {
  complex value{0.0, 0.0};
  double err_estimate = 0.0;
  long long evaluations = 0;
};

using Integrand2D = std::function<complex(double, double)>;  // (x, y)

/// Reduced radial-frequency integral
///   pi^2 * Int dy Int_{x_domain} w(s) g(s, y) ds
/// with w(s) = s (the 4-D radial measure) or w = 1 (radial_weight = false,
/// used by the external-momentum derivative identity).  The frequency axis
/// is compactified by y = y_map_scale * tan(pi u / 2); the x integration is
/// split at every breakpoint in spec.x_split; an infinite upper x limit is
/// mapped by x = x0 + t/(1-t).  Nesting: outer x, inner y.
/// Throws NonConvergence if the error target is unmet within max_evals.
IntegralResult radial_frequency_integral(const Integrand2D& g, double x_lo,
                                         double x_hi, const QuadratureSpec& spec,
                                         bool radial_weight = true);

/// Plain Monte-Carlo estimate of Int_{R^4} dX Int_R dy g(|X|^2, y) over the
/// un-reduced 5-D domain, importance-sampled in the radial and frequency
/// tails.  Deterministic for a fixed seed.  err_estimate is 1 statistical
/// sigma.
IntegralResult mc_oracle_integral(const Integrand2D& g, long long samples,
                                  std::uint64_t seed);

}  // namespace tgftflow
