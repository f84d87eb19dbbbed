#pragma once

#include "tgftflow/types.hpp"

namespace tgftflow {

/// Litim momentum regulator r(x) = alpha*(1-x)*theta(1-x).
/// Half-open step convention: theta = 1 for x < 1, 0 for x >= 1 (the single
/// point x = 1 has measure zero and r(1) = 0 either way).
inline double momentum_regulator(double x, const RegulatorParams& p) {
  return x < 1.0 ? p.alpha * (1.0 - x) : 0.0;
}

struct FrequencyKernels {
  complex rho;  // 1/(1 - i*beta_hat*y); single pole in the lower half-plane
  double tau;   // -beta_hat/(1 + beta_hat^2 y^2)
};

inline FrequencyKernels frequency_kernels(double y, const RegulatorParams& p) {
  const double by = p.beta_hat * y;
  return {1.0 / complex(1.0, -by), -p.beta_hat / (1.0 + by * by)};
}

/// Propagator denominator f(x,y) = i*y + x + msq + rho(-y)*r(x).
/// Satisfies f(x,-y) = conj(f(x,y)).
inline complex propagator_denominator(const KernelPoint& pt, double msq,
                                      const RegulatorParams& p) {
  return complex(pt.x + msq, pt.y) +
         frequency_kernels(-pt.y, p).rho * momentum_regulator(pt.x, p);
}

struct MuKernels {
  AffinePair mu1;
  AffinePair mu2;
};

/// Scale-derivative kernels of the two regulator components, with the eta
/// dependence factored affinely (response-field anomalous dimension = 0).
/// Both vanish identically for x >= 1.  mu2_x_power selects the power of x
/// in mu2's theta term (2 as printed; 1 for sensitivity studies).
inline MuKernels mu_kernels(const KernelPoint& pt, const RegulatorParams& p,
                            int mu2_x_power = 2) {
  if (pt.x >= 1.0) return {};
  const double rx = p.alpha * (1.0 - pt.x);
  const double b = p.beta_hat;
  const double by = b * pt.y;
  const complex d(1.0, -by);        // 1 - i*beta_hat*y
  const complex d2 = d * d;
  const complex rho = 1.0 / d;
  const double den = 1.0 + by * by;
  const double den2 = den * den;

  AffinePair mu1{2.0 * rho * rx - 2.0 * rx / d2 + 2.0 * p.alpha / d,
                 rho * rx - complex(0.0, by) * rx / d2};
  const double xp = (mu2_x_power == 2) ? pt.x * pt.x : pt.x;
  AffinePair mu2{complex(4.0 * b * rx / den2 - 2.0 * p.alpha * b * xp / den, 0.0),
                 complex(-2.0 * b * by * by * rx / den2, 0.0)};
  return {mu1, mu2};
}

}  // namespace tgftflow
