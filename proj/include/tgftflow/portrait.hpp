#pragma once

#include <vector>

#include "tgftflow/fixedpoint.hpp"
#include "tgftflow/flow.hpp"

namespace tgftflow {

enum class Termination { BoxExit, SingularRegion, Wall, StepFloor, TBudget };

enum class Direction { TowardUV, TowardIR };

struct TrajectorySample {
  double t = 0.0;  // log-scale parameter
  FlowState state;
  double eta = 0.0;
};

struct TrajectoryRecord {
  std::vector<TrajectorySample> samples;  // t strictly monotone
  Termination termination = Termination::TBudget;
};

struct TrajectoryOptions {
  double t_budget = 10.0;
  double local_err = 1e-8;
  double h_init = 1e-3;
  double h_min = 1e-10;
  double singular_floor = 1e-3;  // stop when the eta denominator drops below
  double box_msq_lo = -0.999, box_msq_hi = 10.0;
  double box_lam_lo = -10.0, box_lam_hi = 10.0;
  int max_samples = 100000;
};

/// Adaptive embedded RK4(5) (Cash-Karp) integration of d(state)/dt =
/// +-beta(state); toward-UV is the +beta sign (couplings run with growing
/// scale).  Throws ImmediateTermination when the start already violates a
/// stop condition.
TrajectoryRecord integrate_trajectory(const FlowState& start, Direction dir,
                                      const RegulatorParams& params,
                                      const QuadratureSpec& spec,
                                      const FlowOptions& opts = {},
                                      const TrajectoryOptions& traj = {});

enum class RegionClass { Physical, Singular, Wall };

struct RegionMap {
  double msq_lo, msq_hi, lam_lo, lam_hi;
  int n_msq, n_lam;
  std::vector<RegionClass> cells;  // row-major, msq fastest
};

/// Classify a rectangle of states by the sign of the eta denominator.
/// Cells where the computation itself fails are marked Wall.
RegionMap region_map(double msq_lo, double msq_hi, double lam_lo, double lam_hi,
                     int n_msq, int n_lam, const RegulatorParams& params,
                     const QuadratureSpec& spec, const FlowOptions& opts = {});

/// Integrate toward-IR from fp +- eps * v along the least-stable direction;
/// v is the real part of the leading eigenvector when the exponents are
/// complex (a convention, recorded in output metadata).
std::pair<TrajectoryRecord, TrajectoryRecord> trace_separatrix(
    const FixedPointReport& fp, const RegulatorParams& params,
    const QuadratureSpec& spec, const FlowOptions& opts = {},
    const TrajectoryOptions& traj = {}, double eps = 1e-4);

}  // namespace tgftflow
