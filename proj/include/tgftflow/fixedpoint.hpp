#pragma once

#include <array>
#include <vector>

#include "tgftflow/flow.hpp"

namespace tgftflow {

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct FixedPointReport {
  FlowState state;
  double eta_star = 0.0;
  std::array<complex, 2> theta{};  // negated stability eigenvalues,
                                   // positive-imaginary first
  Matrix2 jacobian{};              // M[i][j] = d(beta_j)/d(x_i), x = (msq, lam)
  double residual = 0.0;           // |beta| at the reported state
  int iterations = 0;
};

/// Damped Newton search for a root of (beta_msq, beta_lam) from a guess.
/// Armijo backtracking on |beta|^2; steps are shortened to stay in the
/// physical region (msq > -1 and eta denominator above the floor).
/// Throws NoConvergence (200-iteration budget) or LeftPhysicalRegion.
FixedPointReport find_fixed_point(const RegulatorParams& params,
                                  const FlowState& guess,
                                  const QuadratureSpec& spec,
                                  const FlowOptions& opts = {});

/// Central-difference Jacobian M[i][j] = d(beta_j)/d(x_i), step 1e-5.
Matrix2 stability_matrix(const FlowState& state, const RegulatorParams& params,
                         const QuadratureSpec& spec,
                         const FlowOptions& opts = {});

/// Closed-form eigenvalues of a 2x2 real matrix, negated; a complex pair is
/// ordered positive-imaginary first, a real pair descending.
std::array<complex, 2> critical_exponents(const Matrix2& M);

struct GridSearchConfig {
  double msq_lo = -0.9, msq_hi = 1.0;
  double lam_lo = 1e-4, lam_hi = 0.1;  // lam_hi config-exposed
  int n_msq = 20, n_lam = 20;
  int max_seeds = 8;
};

/// Coarse sign-change scan seeding Newton; returns deduplicated non-Gaussian
/// roots (may be empty).  Thresholds are shared across the lam column, so the
/// grid costs n_msq threshold sets.
std::vector<FixedPointReport> find_fixed_points(const RegulatorParams& params,
                                                const QuadratureSpec& spec,
                                                const FlowOptions& opts = {},
                                                const GridSearchConfig& grid = {});

}  // namespace tgftflow
