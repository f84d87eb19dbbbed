#pragma once

#include <vector>

#include "tgftflow/types.hpp"

namespace tgftflow {

/// State of the equilibrium (non-stochastic) companion model.
struct EqState {
  double msq = 0.0;
  double lam = 0.0;
};

struct EqBeta {
  double beta_msq = 0.0;
  double beta_lam = 0.0;
  double eta = 0.0;
  double constraint_residual = 0.0;  // only set by the constrained variant
};

/// Closed-form truncation flow of the equilibrium model: no quadrature.
/// Throws SingularEta when the eta denominator vanishes.
EqBeta eq_beta_truncation(const EqState& state);

/// Flow with eta from the Ward-improved expression and beta_lam solved from
/// the exact relation between the beta functions; the reported residual
/// re-evaluates that relation after the solve.
EqBeta eq_beta_constrained(const EqState& state);

/// Converged solution of the melonic Schwinger-Dyson self-energy on the
/// rank-5 lattice with sharp cutoff |q_i| <= cutoff.
struct SDSolution {
  std::vector<double> sigma_r;  // indexed by p = 0..cutoff, value at p^2
  double a_infty = 0.0;         // sum of squared propagators at the cutoff
  double z_lambda = 0.0;
  double z_infty = 0.0;
  int cutoff = 0;
  double lam_r = 0.0;
  double m_rsq = 1.0;
  int sweeps = 0;
};

/// Damped fixed-point iteration for the renormalized self-energy sigma_r
/// (value and discrete slope at zero subtracted each sweep), converged when
/// the sup-norm update falls below 1e-10.
/// Throws CutoffTooSmall (cutoff < 5) or IterationDiverged.
SDSolution sd_solve_sigma(double lam_r, int cutoff, double damping = 0.5,
                          double m_rsq = 1.0);

struct SDRenormalization {
  double z_infty = 0.0;
  double z_lambda = 0.0;
  double identity_residual = 0.0;  // |z_infty - z_lambda|
};

SDRenormalization sd_renormalization_factors(const SDSolution& sol);

}  // namespace tgftflow
