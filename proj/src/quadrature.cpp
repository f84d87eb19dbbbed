#include "tgftflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tgftflow {

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half; QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct EvalCounter {
  long long n = 0;
  long long cap = 0;
};

using Func1D = std::function<complex(double)>;

void gk15(const Func1D& f, double a, double b, complex& value, double& err,
          EvalCounter& cnt) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  complex fk[15];
  for (int i = 0; i < 7; ++i) {
    fk[i] = f(c - h * kXgk[i]);
    fk[14 - i] = f(c + h * kXgk[i]);
  }
  fk[7] = f(c);
  cnt.n += 15;

  complex resk = kWgk[7] * fk[7];
  complex resg = kWg[3] * fk[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fk[i] + fk[14 - i]);
    if (i % 2 == 1) resg += kWg[i / 2] * (fk[i] + fk[14 - i]);
  }
  value = resk * h;
  err = std::abs(resk - resg) * std::abs(h);
}

struct Segment {
  double a, b;
  complex value;
  double err;
};

// Globally adaptive 1-D integration over consecutive breakpoints.
// Deterministic: always refines the segment with the largest error.
complex adaptive_1d(const Func1D& f, const std::vector<double>& breaks,
                    double rel_tol, double abs_tol, EvalCounter& cnt,
                    double& err_out, bool* budget_ok) {
  std::vector<Segment> segs;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    Segment s{breaks[i], breaks[i + 1], {}, 0.0};
    if (s.b <= s.a) continue;
    gk15(f, s.a, s.b, s.value, s.err, cnt);
    segs.push_back(s);
  }
  constexpr size_t kMaxSegments = 4000;
  for (;;) {
    complex total{0.0, 0.0};
    double err = 0.0;
    for (const auto& s : segs) {
      total += s.value;
      err += s.err;
    }
    const double target = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= target) {
      err_out = err;
      return total;
    }
    if (cnt.n + 30 > cnt.cap || segs.size() >= kMaxSegments) {
      err_out = err;
      if (budget_ok) *budget_ok = false;
      return total;
    }
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].err > segs[worst].err) worst = i;
    Segment left = segs[worst], right = segs[worst];
    const double mid = 0.5 * (segs[worst].a + segs[worst].b);
    left.b = mid;
    right.a = mid;
    gk15(f, left.a, left.b, left.value, left.err, cnt);
    gk15(f, right.a, right.b, right.value, right.err, cnt);
    segs[worst] = left;
    segs.push_back(right);
  }
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

IntegralResult radial_frequency_integral(const Integrand2D& g, double x_lo,
                                         double x_hi,
                                         const QuadratureSpec& spec,
                                         bool radial_weight) {
  EvalCounter cnt{0, spec.max_evals};
  bool ok = true;
  double max_inner_rel = 0.0;

  const double inner_rel = 0.05 * spec.rel_tol;
  const double inner_abs = 0.05 * spec.abs_tol;

  // Inner frequency integral at fixed x, compactified u in (-1, 1).
  auto inner = [&](double x) -> complex {
    auto fu = [&](double u) -> complex {
      const double cu = std::cos(0.5 * kPi * u);
      const double y = spec.y_map_scale * std::tan(0.5 * kPi * u);
      const double jac = spec.y_map_scale * 0.5 * kPi / (cu * cu);
      return g(x, y) * jac;
    };
    double ierr = 0.0;
    const complex v = adaptive_1d(fu, {-1.0, -0.5, 0.0, 0.5, 1.0}, inner_rel,
                                  inner_abs, cnt, ierr, &ok);
    const double mag = std::abs(v);
    if (mag > 0.0) max_inner_rel = std::max(max_inner_rel, ierr / mag);
    return v;
  };

  // Outer radial breakpoints on the finite part.
  std::vector<double> breaks{x_lo};
  std::vector<double> splits = spec.x_split;
  std::sort(splits.begin(), splits.end());
  const bool infinite = std::isinf(x_hi);
  const double finite_top = infinite ? (splits.empty() ? x_lo + 1.0 : std::max(splits.back(), x_lo))
                                     : x_hi;
  for (double s : splits)
    if (s > x_lo && s < finite_top) breaks.push_back(s);
  if (finite_top > x_lo) breaks.push_back(finite_top);

  auto outer_f = [&](double x) -> complex {
    const double w = radial_weight ? x : 1.0;
    return w * inner(x);
  };

  const double outer_rel = 0.85 * spec.rel_tol;
  const double outer_abs = 0.85 * spec.abs_tol;

  complex total{0.0, 0.0};
  double err = 0.0;
  if (breaks.size() >= 2) {
    double e = 0.0;
    total += adaptive_1d(outer_f, breaks, outer_rel, outer_abs, cnt, e, &ok);
    err += e;
  }
  if (infinite) {
    // Tail x = finite_top + t/(1-t), t in [0, 1).
    auto tail_f = [&](double t) -> complex {
      const double om = 1.0 - t;
      const double x = finite_top + t / om;
      const double jac = 1.0 / (om * om);
      const double w = radial_weight ? x : 1.0;
      return w * jac * inner(x);
    };
    double e = 0.0;
    total += adaptive_1d(tail_f, {0.0, 0.5, 1.0}, outer_rel, outer_abs, cnt, e,
                         &ok);
    err += e;
  }

  IntegralResult res;
  res.value = kPi * kPi * total;
  // Inner tolerances are 20x tighter than the outer target; fold their
  // worst observed relative error into the estimate.
  res.err_estimate = kPi * kPi * err +
                     max_inner_rel * std::abs(res.value);
  res.evaluations = cnt.n;
  if (!ok || res.err_estimate >
                 std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value))) {
    if (!ok)
      throw NonConvergence("radial_frequency_integral: evaluation budget "
                           "exhausted before reaching the error target");
  }
  return res;
}

IntegralResult mc_oracle_integral(const Integrand2D& g, long long samples,
                                  std::uint64_t seed) {
  if (samples < 10'000)
    throw DomainError("mc_oracle_integral: need at least 1e4 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Squared-radius density p_s(s) = 2/(1+s)^3; frequency density Cauchy(1).
  double mean_re = 0.0, mean_im = 0.0, m2 = 0.0;
  for (long long n = 1; n <= samples; ++n) {
    const double u = unif(rng);
    const double s_target = 1.0 / std::sqrt(1.0 - u) - 1.0;
    // Honest 5-D sample: an explicit point on the 4-sphere of radius sqrt(s).
    double d[4], norm2 = 0.0;
    for (double& di : d) {
      di = gauss(rng);
      norm2 += di * di;
    }
    if (norm2 == 0.0) norm2 = 1.0;
    const double scale = std::sqrt(s_target / norm2);
    double s = 0.0;
    for (double di : d) {
      const double xi = di * scale;
      s += xi * xi;
    }
    double v = unif(rng);
    if (v == 0.0) v = 0.5;
    const double y = std::tan(kPi * (v - 0.5));

    const double ps = 2.0 / ((1.0 + s) * (1.0 + s) * (1.0 + s));
    const double py = 1.0 / (kPi * (1.0 + y * y));
    const complex w = g(s, y) * (kPi * kPi * s / (ps * py));

    const double dre = w.real() - mean_re;
    const double dim = w.imag() - mean_im;
    mean_re += dre / static_cast<double>(n);
    mean_im += dim / static_cast<double>(n);
    m2 += dre * (w.real() - mean_re) + dim * (w.imag() - mean_im);
  }
  IntegralResult res;
  res.value = complex(mean_re, mean_im);
  res.err_estimate =
      samples > 1 ? std::sqrt(m2 / (static_cast<double>(samples) *
                                    static_cast<double>(samples - 1)))
                  : std::numeric_limits<double>::infinity();
  res.evaluations = samples;
  return res;
}

}  // namespace tgftflow
