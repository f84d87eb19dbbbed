#include "tgftflow/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace tgftflow {

int worker_count() {
  if (const char* env = std::getenv("TGFTFLOW_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? (int)hc : 1;
}

namespace {

ScanCell solve_cell(double alpha, double beta_hat,
                    const std::optional<FlowState>& seed,
                    const QuadratureSpec& spec, const FlowOptions& opts,
                    const GridSearchConfig& grid_cfg) {
  ScanCell cell;
  cell.alpha = alpha;
  cell.beta_hat = beta_hat;
  const RegulatorParams params{alpha, beta_hat};
  try {
    if (seed) {
      try {
        FixedPointReport rep = find_fixed_point(params, *seed, spec, opts);
        if (rep.state.lam > 1e-6) {
          cell.status = CellStatus::Ok;
          cell.report = rep;
          return cell;
        }
      } catch (const NoConvergence&) {
      } catch (const LeftPhysicalRegion&) {
      }
    }
    auto roots = find_fixed_points(params, spec, opts, grid_cfg);
    if (roots.empty()) {
      cell.status = CellStatus::NoFixedPoint;
    } else {
      cell.status = CellStatus::Ok;
      cell.report = roots.front();
    }
  } catch (const SingularEta&) {
    cell.status = CellStatus::Singular;
  } catch (const NonConvergence&) {
    cell.status = CellStatus::Failed;
  } catch (const DomainError&) {
    cell.status = CellStatus::Failed;
  }
  return cell;
}

}  // namespace

ScanGrid msp_scan(double alpha_lo, double alpha_hi, int n_alpha,
                  double beta_lo, double beta_hi, int n_beta,
                  const QuadratureSpec& spec, const FlowOptions& opts,
                  const GridSearchConfig& grid_cfg) {
  ScanGrid grid{alpha_lo, alpha_hi, n_alpha, beta_lo, beta_hi, n_beta, {}};
  grid.cells.resize((size_t)n_alpha * n_beta);

  const int workers = worker_count();
  for (int ib = 0; ib < n_beta; ++ib) {
    const double bh =
        n_beta > 1 ? beta_lo + (beta_hi - beta_lo) * ib / (n_beta - 1)
                   : beta_lo;
    std::atomic<int> next{0};
    auto work = [&]() {
      for (;;) {
        const int ia = next.fetch_add(1);
        if (ia >= n_alpha) return;
        const double al =
            n_alpha > 1 ? alpha_lo + (alpha_hi - alpha_lo) * ia / (n_alpha - 1)
                        : alpha_lo;
        std::optional<FlowState> seed;
        if (ib > 0) {
          const ScanCell& below = grid.at(ia, ib - 1);
          if (below.status == CellStatus::Ok) seed = below.report->state;
        }
        grid.cells[(size_t)ib * n_alpha + ia] =
            solve_cell(al, bh, seed, spec, opts, grid_cfg);
      }
    };
    if (workers <= 1 || n_alpha == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < std::min(workers, n_alpha); ++w)
        pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }
  return grid;
}

std::vector<StationaryPoint> stationary_points(
    const ScanGrid& grid,
    const std::function<double(const FixedPointReport&)>& observable) {
  const int na = grid.n_alpha, nb = grid.n_beta;
  std::vector<double> val((size_t)na * nb, 0.0);
  std::vector<char> ok((size_t)na * nb, 0);
  double rms = 0.0;
  int n_ok = 0;
  for (int ib = 0; ib < nb; ++ib)
    for (int ia = 0; ia < na; ++ia) {
      const ScanCell& c = grid.at(ia, ib);
      if (c.status == CellStatus::Ok && c.report) {
        const double v = observable(*c.report);
        val[(size_t)ib * na + ia] = v;
        ok[(size_t)ib * na + ia] = 1;
        rms += v * v;
        ++n_ok;
      }
    }
  if (n_ok == 0) throw EmptyResult("stationary_points: no solved cells");
  rms = std::sqrt(rms / n_ok);
  const double tol = 1e-2 * rms;

  const double da = na > 1 ? (grid.alpha_hi - grid.alpha_lo) / (na - 1) : 1.0;
  const double db = nb > 1 ? (grid.beta_hi - grid.beta_lo) / (nb - 1) : 1.0;

  auto v = [&](int ia, int ib) { return val[(size_t)ib * na + ia]; };
  auto good = [&](int ia, int ib) { return ok[(size_t)ib * na + ia] != 0; };

  std::vector<StationaryPoint> out;
  for (int ib = 1; ib + 1 < nb; ++ib)
    for (int ia = 1; ia + 1 < na; ++ia) {
      bool stencil_ok = true;
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di)
          stencil_ok = stencil_ok && good(ia + di, ib + dj);
      if (!stencil_ok) continue;

      const double ga = (v(ia + 1, ib) - v(ia - 1, ib)) / (2.0 * da);
      const double gb = (v(ia, ib + 1) - v(ia, ib - 1)) / (2.0 * db);
      const bool flat_a = std::abs(ga * da) < tol;
      const bool flat_b = std::abs(gb * db) < tol;
      const bool sign_a =
          (v(ia + 1, ib) - v(ia, ib)) * (v(ia, ib) - v(ia - 1, ib)) < 0.0;
      const bool sign_b =
          (v(ia, ib + 1) - v(ia, ib)) * (v(ia, ib) - v(ia, ib - 1)) < 0.0;
      if (!((flat_a || sign_a) && (flat_b || sign_b))) continue;

      const double haa = v(ia + 1, ib) - 2.0 * v(ia, ib) + v(ia - 1, ib);
      const double hbb = v(ia, ib + 1) - 2.0 * v(ia, ib) + v(ia, ib - 1);
      const double hab = 0.25 * (v(ia + 1, ib + 1) - v(ia - 1, ib + 1) -
                                 v(ia + 1, ib - 1) + v(ia - 1, ib - 1));
      const double det = haa * hbb - hab * hab;
      StationaryKind kind = StationaryKind::Saddle;
      if (det > 0.0) kind = haa > 0.0 ? StationaryKind::Minimum
                                      : StationaryKind::Maximum;
      out.push_back({grid.alpha_lo + ia * da, grid.beta_lo + ib * db,
                     v(ia, ib), kind});
    }
  if (out.empty())
    throw EmptyResult("stationary_points: no stationary point found");
  return out;
}

std::string scan_to_csv(const ScanGrid& grid) {
  std::ostringstream os;
  os.precision(17);
  os << "alpha,beta_hat,msq_star,lam_star,eta_star,re_theta,im_theta,status\n";
  auto status_name = [](CellStatus s) {
    switch (s) {
      case CellStatus::Ok: return "ok";
      case CellStatus::NoFixedPoint: return "no-fixed-point";
      case CellStatus::Singular: return "singular";
      default: return "failed";
    }
  };
  for (int ib = 0; ib < grid.n_beta; ++ib)
    for (int ia = 0; ia < grid.n_alpha; ++ia) {
      const ScanCell& c = grid.at(ia, ib);
      os << c.alpha << ',' << c.beta_hat << ',';
      if (c.report) {
        os << c.report->state.msq << ',' << c.report->state.lam << ','
           << c.report->eta_star << ',' << c.report->theta[0].real() << ','
           << c.report->theta[0].imag() << ',';
      } else {
        os << ",,,,,";
      }
      os << status_name(c.status) << '\n';
    }
  return os.str();
}

}  // namespace tgftflow
