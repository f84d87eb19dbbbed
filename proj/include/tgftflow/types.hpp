#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tgftflow {

using complex = std::complex<double>;

/// Regulator family parameters: Litim amplitude alpha for the momentum
/// factor, frequency parameter beta_hat for the rational frequency factor.
/// beta_hat = 0 selects momentum-only coarse-graining (tau == 0, rho == 1).
struct RegulatorParams {
  double alpha = 1.0;
  double beta_hat = 0.0;

  bool operator==(const RegulatorParams&) const = default;
};

/// Dimensionless evaluation point: x = p^2/k^2 >= 0, y = omega/k^2.
struct KernelPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Quantity linear in the anomalous dimension eta: value(eta) = c0 + eta*c1.
/// The linearity is exact because the response-field anomalous dimension
/// vanishes in the symmetric phase.
struct AffinePair {
  complex c0{0.0, 0.0};
  complex c1{0.0, 0.0};

  complex at(double eta) const { return c0 + eta * c1; }

  AffinePair operator+(const AffinePair& o) const { return {c0 + o.c0, c1 + o.c1}; }
  AffinePair operator-(const AffinePair& o) const { return {c0 - o.c0, c1 - o.c1}; }
  AffinePair operator*(double s) const { return {s * c0, s * c1}; }
};

/// Point in the 2-D coupling plane: dimensionless mass and quartic coupling.
/// The flow is undefined at msq = -1 (symmetric-phase wall).
struct FlowState {
  double msq = 0.0;
  double lam = 0.0;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularEta : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LeftPhysicalRegion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IterationDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CutoffTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ImmediateTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tgftflow
