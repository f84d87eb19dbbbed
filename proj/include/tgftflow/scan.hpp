#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tgftflow/fixedpoint.hpp"

namespace tgftflow {

enum class CellStatus { Ok, NoFixedPoint, Singular, Failed };

struct ScanCell {
  double alpha = 0.0;
  double beta_hat = 0.0;
  CellStatus status = CellStatus::Failed;
  std::optional<FixedPointReport> report;
};

struct ScanGrid {
  double alpha_lo, alpha_hi;
  int n_alpha;
  double beta_lo, beta_hi;
  int n_beta;
  std::vector<ScanCell> cells;  // row-major: beta rows, alpha fastest

  const ScanCell& at(int ia, int ib) const {
    return cells[(size_t)ib * n_alpha + ia];
  }
};

/// Fixed-point observables over a rectangular (alpha, beta_hat) grid.
/// Rows (fixed beta_hat) are processed in order; within a row, cells run in
/// parallel, each seeded by continuation from the same-column cell of the
/// previous row (committed before the row starts), so results are identical
/// for any worker count.  Cells without a continuation seed fall back to the
/// coarse grid search.  Per-cell failures are recorded, never aborting.
ScanGrid msp_scan(double alpha_lo, double alpha_hi, int n_alpha,
                  double beta_lo, double beta_hi, int n_beta,
                  const QuadratureSpec& spec, const FlowOptions& opts = {},
                  const GridSearchConfig& grid_cfg = {});

enum class StationaryKind { Minimum, Maximum, Saddle };

struct StationaryPoint {
  double alpha, beta_hat, value;
  StationaryKind kind;
};

/// Interior grid points where both central-difference partials of the
/// observable fall below 1e-2 x (grid RMS of the observable) or change sign,
/// classified by the discrete Hessian.  Stencils touching failed cells are
/// skipped.  Throws EmptyResult if nothing qualifies.
std::vector<StationaryPoint> stationary_points(
    const ScanGrid& grid, const std::function<double(const FixedPointReport&)>& observable);

/// CSV: alpha,beta_hat,msq_star,lam_star,eta_star,re_theta,im_theta,status.
std::string scan_to_csv(const ScanGrid& grid);

/// Worker-pool size: TGFTFLOW_THREADS when set, else hardware concurrency.
int worker_count();

}  // namespace tgftflow
