#include "tgftflow/portrait.hpp"

#include <cmath>
#include <optional>

namespace tgftflow {

namespace {

// Cash-Karp embedded Runge-Kutta 4(5) tableau.
constexpr double kB[6][5] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {3.0 / 10.0, -9.0 / 10.0, 6.0 / 5.0},
    {-11.0 / 54.0, 5.0 / 2.0, -70.0 / 27.0, 35.0 / 27.0},
    {1631.0 / 55296.0, 175.0 / 512.0, 575.0 / 13824.0, 44275.0 / 110592.0,
     253.0 / 4096.0}};
constexpr double kC5[6] = {37.0 / 378.0, 0.0, 250.0 / 621.0, 125.0 / 594.0,
                           0.0, 512.0 / 1771.0};
constexpr double kC4[6] = {2825.0 / 27648.0, 0.0, 18575.0 / 48384.0,
                           13525.0 / 55296.0, 277.0 / 14336.0, 1.0 / 4.0};

struct EtaBeta {
  double bm, bl, eta, denom;
};

std::optional<EtaBeta> rhs_info(const FlowState& s,
                                const RegulatorParams& params,
                                const QuadratureSpec& spec,
                                const FlowOptions& opts) {
  if (s.msq <= -1.0) return std::nullopt;
  ThresholdSet ts;
  try {
    ts = opts.use_cache
             ? cached_thresholds(s.msq, params, spec, opts.mu2_x_power)
             : threshold_set(s.msq, params, spec, opts.mu2_x_power);
  } catch (const NonConvergence&) {
    return std::nullopt;
  }
  if (opts.threshold_scale != 1.0)
    ts = scale_thresholds(ts, opts.threshold_scale);
  const EtaSolution es = solve_eta(s, ts, opts.eta_floor);
  if (es.singular) return std::nullopt;
  const BetaVector b = beta_functions_from(s, ts, opts.eta_floor);
  return EtaBeta{b.beta_msq, b.beta_lam, b.eta, es.denominator};
}

}  // namespace

TrajectoryRecord integrate_trajectory(const FlowState& start, Direction dir,
                                      const RegulatorParams& params,
                                      const QuadratureSpec& spec,
                                      const FlowOptions& opts,
                                      const TrajectoryOptions& traj) {
  const double sign = (dir == Direction::TowardUV) ? 1.0 : -1.0;

  auto in_box = [&](const FlowState& s) {
    return s.msq >= traj.box_msq_lo && s.msq <= traj.box_msq_hi &&
           s.lam >= traj.box_lam_lo && s.lam <= traj.box_lam_hi;
  };

  auto info0 = rhs_info(start, params, spec, opts);
  if (start.msq <= -1.0)
    throw ImmediateTermination("integrate_trajectory: start beyond the wall");
  if (!in_box(start))
    throw ImmediateTermination("integrate_trajectory: start outside the box");
  if (!info0 || info0->denom < traj.singular_floor)
    throw ImmediateTermination("integrate_trajectory: start is singular");

  TrajectoryRecord rec;
  rec.termination = Termination::TBudget;
  double t = 0.0;
  FlowState x = start;
  double eta = info0->eta;
  rec.samples.push_back({t, x, eta});

  double h = traj.h_init;
  while (t < traj.t_budget &&
         (int)rec.samples.size() < traj.max_samples) {
    if (h < traj.h_min) {
      rec.termination = Termination::StepFloor;
      return rec;
    }
    h = std::min(h, traj.t_budget - t);

    // One Cash-Karp attempt; any stage failure shrinks the step.
    double km[6], kl[6];
    bool stage_ok = true;
    {
      auto i0 = rhs_info(x, params, spec, opts);
      if (!i0) {
        rec.termination = Termination::SingularRegion;
        return rec;
      }
      km[0] = sign * i0->bm;
      kl[0] = sign * i0->bl;
    }
    for (int s = 1; s < 6 && stage_ok; ++s) {
      FlowState xs = x;
      for (int j = 0; j < s; ++j) {
        xs.msq += h * kB[s][j] * km[j];
        xs.lam += h * kB[s][j] * kl[j];
      }
      auto is = rhs_info(xs, params, spec, opts);
      if (!is) {
        stage_ok = false;
        break;
      }
      km[s] = sign * is->bm;
      kl[s] = sign * is->bl;
    }
    if (!stage_ok) {
      h *= 0.5;
      continue;
    }

    FlowState x5 = x, x4 = x;
    for (int s = 0; s < 6; ++s) {
      x5.msq += h * kC5[s] * km[s];
      x5.lam += h * kC5[s] * kl[s];
      x4.msq += h * kC4[s] * km[s];
      x4.lam += h * kC4[s] * kl[s];
    }
    const double scale_m = 1.0 + std::abs(x.msq);
    const double scale_l = 1.0 + std::abs(x.lam);
    const double err = std::max(std::abs(x5.msq - x4.msq) / scale_m,
                                std::abs(x5.lam - x4.lam) / scale_l);
    if (err > traj.local_err) {
      h *= std::max(0.2, 0.9 * std::pow(traj.local_err / err, 0.25));
      continue;
    }

    // Accepted step: check stop conditions at the new state.
    auto inew = rhs_info(x5, params, spec, opts);
    t += h;
    if (!inew || inew->denom < traj.singular_floor) {
      rec.termination =
          (x5.msq <= -1.0) ? Termination::Wall : Termination::SingularRegion;
      return rec;  // last physical sample retained
    }
    x = x5;
    eta = inew->eta;
    rec.samples.push_back({t, x, eta});
    if (!in_box(x)) {
      rec.termination = Termination::BoxExit;
      return rec;
    }
    const double grow =
        err > 0.0 ? 0.9 * std::pow(traj.local_err / err, 0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, grow));
  }
  if ((int)rec.samples.size() >= traj.max_samples)
    rec.termination = Termination::StepFloor;
  return rec;
}

RegionMap region_map(double msq_lo, double msq_hi, double lam_lo, double lam_hi,
                     int n_msq, int n_lam, const RegulatorParams& params,
                     const QuadratureSpec& spec, const FlowOptions& opts) {
  RegionMap map{msq_lo, msq_hi, lam_lo, lam_hi, n_msq, n_lam, {}};
  map.cells.resize((size_t)n_msq * n_lam, RegionClass::Wall);
  for (int j = 0; j < n_lam; ++j) {
    const double lam =
        n_lam > 1 ? lam_lo + (lam_hi - lam_lo) * j / (n_lam - 1) : lam_lo;
    for (int i = 0; i < n_msq; ++i) {
      const double msq =
          n_msq > 1 ? msq_lo + (msq_hi - msq_lo) * i / (n_msq - 1) : msq_lo;
      RegionClass cls = RegionClass::Wall;
      if (msq > -1.0) {
        try {
          cls = eta_denominator_sign({msq, lam}, params, spec, opts)
                    ? RegionClass::Physical
                    : RegionClass::Singular;
        } catch (const NonConvergence&) {
        } catch (const DomainError&) {
        }
      }
      map.cells[(size_t)j * n_msq + i] = cls;
    }
  }
  return map;
}

std::pair<TrajectoryRecord, TrajectoryRecord> trace_separatrix(
    const FixedPointReport& fp, const RegulatorParams& params,
    const QuadratureSpec& spec, const FlowOptions& opts,
    const TrajectoryOptions& traj, double eps) {
  // Linearized dynamics dx/dt = J (x - x*), J[i][j] = d beta_i / d x_j.
  const Matrix2& M = fp.jacobian;
  const double j00 = M[0][0], j01 = M[1][0], j10 = M[0][1], j11 = M[1][1];
  const double tr = j00 + j11;
  const double det = j00 * j11 - j01 * j10;
  const complex disc = std::sqrt(complex(0.25 * tr * tr - det, 0.0));
  complex e = 0.5 * tr + disc;  // least-stable (largest real part)
  if ((0.5 * tr - disc).real() > e.real()) e = 0.5 * tr - disc;

  // Eigenvector of J for eigenvalue e; real part when complex.
  complex v0 = j01, v1 = e - j00;
  if (std::abs(v0) + std::abs(v1) < 1e-14) {
    v0 = e - j11;
    v1 = j10;
  }
  double vr0 = v0.real(), vr1 = v1.real();
  const double n = std::hypot(vr0, vr1);
  if (n > 0.0) {
    vr0 /= n;
    vr1 /= n;
  } else {
    vr0 = 1.0;
    vr1 = 0.0;
  }

  const FlowState plus{fp.state.msq + eps * vr0, fp.state.lam + eps * vr1};
  const FlowState minus{fp.state.msq - eps * vr0, fp.state.lam - eps * vr1};
  return {integrate_trajectory(plus, Direction::TowardIR, params, spec, opts,
                               traj),
          integrate_trajectory(minus, Direction::TowardIR, params, spec, opts,
                               traj)};
}

}  // namespace tgftflow
