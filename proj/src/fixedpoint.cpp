#include "tgftflow/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace tgftflow {

namespace {

constexpr double kWallMargin = 1e-6;

// beta evaluation that reports failure instead of throwing (used inside
// line searches, where stepping out of the physical region just shortens
// the step).
std::optional<BetaVector> try_beta(const FlowState& s,
                                   const RegulatorParams& params,
                                   const QuadratureSpec& spec,
                                   const FlowOptions& opts) {
  if (s.msq <= -1.0 + kWallMargin) return std::nullopt;
  try {
    return beta_functions(s, params, spec, opts);
  } catch (const SingularEta&) {
    return std::nullopt;
  } catch (const NonConvergence&) {
    return std::nullopt;
  }
}

double norm2(const BetaVector& b) {
  return b.beta_msq * b.beta_msq + b.beta_lam * b.beta_lam;
}

}  // namespace

Matrix2 stability_matrix(const FlowState& state, const RegulatorParams& params,
                         const QuadratureSpec& spec, const FlowOptions& opts) {
  const double h = 1e-5;
  auto bv = [&](double msq, double lam) {
    const BetaVector b = beta_functions({msq, lam}, params, spec, opts);
    return std::array<double, 2>{b.beta_msq, b.beta_lam};
  };
  const auto bm_p = bv(state.msq + h, state.lam);
  const auto bm_m = bv(state.msq - h, state.lam);
  const auto bl_p = bv(state.msq, state.lam + h);
  const auto bl_m = bv(state.msq, state.lam - h);
  Matrix2 M;
  for (int j = 0; j < 2; ++j) {
    M[0][j] = (bm_p[j] - bm_m[j]) / (2.0 * h);  // d beta_j / d msq
    M[1][j] = (bl_p[j] - bl_m[j]) / (2.0 * h);  // d beta_j / d lam
  }
  return M;
}

std::array<complex, 2> critical_exponents(const Matrix2& M) {
  const double tr = M[0][0] + M[1][1];
  const double det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  const complex disc = std::sqrt(complex(0.25 * tr * tr - det, 0.0));
  complex e1 = 0.5 * tr + disc;
  complex e2 = 0.5 * tr - disc;
  complex t1 = -e1, t2 = -e2;
  if (t1.imag() < t2.imag() ||
      (t1.imag() == t2.imag() && t1.real() < t2.real()))
    std::swap(t1, t2);
  return {t1, t2};
}

FixedPointReport find_fixed_point(const RegulatorParams& params,
                                  const FlowState& guess,
                                  const QuadratureSpec& spec,
                                  const FlowOptions& opts) {
  FlowState x = guess;
  auto b0 = try_beta(x, params, spec, opts);
  if (!b0)
    throw LeftPhysicalRegion("find_fixed_point: guess is not physical");

  const int max_iters = 200;
  int it = 0;
  for (; it < max_iters; ++it) {
    const double res = std::sqrt(norm2(*b0));
    if (res < 1e-8) break;

    const Matrix2 M = stability_matrix(x, params, spec, opts);
    // Newton step: solve J * dx = -beta with J[i][j] = d beta_i / d x_j.
    const double j00 = M[0][0], j01 = M[1][0];
    const double j10 = M[0][1], j11 = M[1][1];
    const double det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-14)
      throw NoConvergence("find_fixed_point: singular Jacobian");
    const double dm = -(j11 * b0->beta_msq - j01 * b0->beta_lam) / det;
    const double dl = -(-j10 * b0->beta_msq + j00 * b0->beta_lam) / det;

    // Armijo backtracking on |beta|^2, shortening to stay physical.
    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
      const FlowState cand{x.msq + t * dm, x.lam + t * dl};
      auto bc = try_beta(cand, params, spec, opts);
      if (!bc) continue;
      if (norm2(*bc) <= norm2(*b0) * (1.0 - 1e-4 * t)) {
        x = cand;
        b0 = bc;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw NoConvergence("find_fixed_point: line search stalled");
  }
  if (it == max_iters)
    throw NoConvergence("find_fixed_point: iteration budget exhausted");

  FixedPointReport rep;
  rep.state = x;
  rep.iterations = it;
  rep.residual = std::sqrt(norm2(*b0));
  rep.eta_star = b0->eta;
  rep.jacobian = stability_matrix(x, params, spec, opts);
  rep.theta = critical_exponents(rep.jacobian);
  return rep;
}

std::vector<FixedPointReport> find_fixed_points(const RegulatorParams& params,
                                                const QuadratureSpec& spec,
                                                const FlowOptions& opts,
                                                const GridSearchConfig& grid) {
  // beta on the grid; thresholds depend only on msq, so each row of fixed
  // msq reuses one ThresholdSet via the cache.
  const int nm = grid.n_msq, nl = grid.n_lam;
  std::vector<double> msqs(nm), lams(nl);
  for (int i = 0; i < nm; ++i)
    msqs[i] = grid.msq_lo + (grid.msq_hi - grid.msq_lo) * i / (nm - 1);
  for (int j = 0; j < nl; ++j)
    lams[j] = grid.lam_lo + (grid.lam_hi - grid.lam_lo) * j / (nl - 1);

  std::vector<std::optional<BetaVector>> bgrid(nm * nl);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nl; ++j)
      bgrid[i * nl + j] = try_beta({msqs[i], lams[j]}, params, spec, opts);

  auto sign_change = [](double a, double b) { return a * b < 0.0; };
  std::vector<FlowState> seeds;
  for (int i = 0; i + 1 < nm && (int)seeds.size() < grid.max_seeds; ++i)
    for (int j = 0; j + 1 < nl && (int)seeds.size() < grid.max_seeds; ++j) {
      const auto &c00 = bgrid[i * nl + j], &c10 = bgrid[(i + 1) * nl + j],
                 &c01 = bgrid[i * nl + j + 1],
                 &c11 = bgrid[(i + 1) * nl + j + 1];
      if (!c00 || !c10 || !c01 || !c11) continue;
      const bool sm = sign_change(c00->beta_msq, c11->beta_msq) ||
                      sign_change(c10->beta_msq, c01->beta_msq);
      const bool sl = sign_change(c00->beta_lam, c11->beta_lam) ||
                      sign_change(c10->beta_lam, c01->beta_lam);
      if (sm && sl)
        seeds.push_back({0.5 * (msqs[i] + msqs[i + 1]),
                         0.5 * (lams[j] + lams[j + 1])});
    }

  std::vector<FixedPointReport> roots;
  for (const FlowState& seed : seeds) {
    try {
      FixedPointReport rep = find_fixed_point(params, seed, spec, opts);
      if (rep.state.lam <= 1e-6) continue;  // Gaussian line
      bool dup = false;
      for (const auto& r : roots)
        dup = dup || (std::abs(r.state.msq - rep.state.msq) < 1e-6 &&
                      std::abs(r.state.lam - rep.state.lam) < 1e-6);
      if (!dup) roots.push_back(rep);
    } catch (const NoConvergence&) {
    } catch (const LeftPhysicalRegion&) {
    }
  }
  return roots;
}

}  // namespace tgftflow
