#include "tgftflow/thresholds.hpp"

#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "tgftflow/kernels.hpp"

namespace tgftflow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct KernelContext {
  double msq;
  RegulatorParams params;
  double eta;
  int mu2_x_power;

  complex f(double x, double y) const {
    return propagator_denominator({x, y}, msq, params);
  }
  complex m1(double x, double y) const {
    return mu_kernels({x, y}, params, mu2_x_power).mu1.at(eta);
  }
  complex m2(double x, double y) const {
    return mu_kernels({x, y}, params, mu2_x_power).mu2.at(eta);
  }
  double one_plus_tau_r(double x, double y) const {
    return 1.0 + frequency_kernels(y, params).tau * momentum_regulator(x, params);
  }
};

// The external squared momentum enters only as a shift of the x-argument.
Integrand2D g21(const KernelContext& c, double a = 0.0) {
  return [c, a](double s, double y) {
    const double x = s + a;
    const complex fp = c.f(x, y), fm = c.f(x, -y);
    return c.m1(x, y) * c.one_plus_tau_r(x, y) / (fp * fm * fm);
  };
}

Integrand2D g22(const KernelContext& c, double a = 0.0) {
  return [c, a](double s, double y) {
    const double x = s + a;
    return c.m2(x, y) / (c.f(x, y) * c.f(x, -y));
  };
}

Integrand2D g31(const KernelContext& c) {
  return [c](double x, double y) {
    const complex fp = c.f(x, y);
    return c.m1(x, y) * c.one_plus_tau_r(x, y) / (fp * fp * fp * c.f(x, -y));
  };
}

Integrand2D g32(const KernelContext& c) {
  return [c](double x, double y) {
    const complex fp = c.f(x, y), fm = c.f(x, -y);
    return c.m1(x, y) * c.one_plus_tau_r(x, y) / (fp * fp * fm * fm);
  };
}

Integrand2D g33(const KernelContext& c) {
  return [c](double x, double y) {
    const complex fp = c.f(x, y);
    return c.m2(x, y) / (fp * fp * c.f(x, -y));
  };
}

Integrand2D gI1(const KernelContext& c) {
  return [c](double x, double y) {
    const complex fp = c.f(x, y);
    return c.one_plus_tau_r(x, y) / (fp * fp * fp * c.f(x, -y));
  };
}

Integrand2D gW1(const KernelContext& c) {
  return [c](double x, double y) {
    if (x >= 1.0) return complex{};
    const complex fp = c.f(x, y), fm = c.f(x, -y);
    const complex rho = frequency_kernels(y, c.params).rho;
    return (-c.params.alpha * rho) * c.one_plus_tau_r(x, y) / (fp * fm * fm) *
           (2.0 / fm + 1.0 / fp);
  };
}

Integrand2D gW2(const KernelContext& c) {
  return [c](double x, double y) {
    if (x >= 1.0) return complex{};
    const complex fm = c.f(x, -y);
    return complex(frequency_kernels(y, c.params).tau, 0.0) /
           (c.f(x, y) * fm * fm);
  };
}

using IntegrandFactory = Integrand2D (*)(const KernelContext&);

// eta-affine pair from evaluations at eta = 0 and eta = 1.
AffinePair affine_eval(IntegrandFactory make, double msq,
                       const RegulatorParams& params, const QuadratureSpec& spec,
                       int xpow, double x_hi, bool radial_weight,
                       double prefactor) {
  KernelContext c0{msq, params, 0.0, xpow};
  KernelContext c1{msq, params, 1.0, xpow};
  const complex v0 =
      radial_frequency_integral(make(c0), 0.0, x_hi, spec, radial_weight).value;
  const complex v1 =
      radial_frequency_integral(make(c1), 0.0, x_hi, spec, radial_weight).value;
  return {prefactor * v0, prefactor * (v1 - v0)};
}

struct CacheKey {
  std::string bytes;
  bool operator<(const CacheKey& o) const { return bytes < o.bytes; }
};

CacheKey make_key(double msq, const RegulatorParams& p,
                  const QuadratureSpec& s, int xpow) {
  std::string b;
  auto put = [&b](const void* ptr, size_t n) {
    b.append(static_cast<const char*>(ptr), n);
  };
  put(&msq, sizeof msq);
  put(&p.alpha, sizeof p.alpha);
  put(&p.beta_hat, sizeof p.beta_hat);
  put(&s.rel_tol, sizeof s.rel_tol);
  put(&s.abs_tol, sizeof s.abs_tol);
  put(&s.y_map_scale, sizeof s.y_map_scale);
  put(&s.max_evals, sizeof s.max_evals);
  for (double v : s.x_split) put(&v, sizeof v);
  put(&xpow, sizeof xpow);
  return {std::move(b)};
}

std::mutex g_cache_mutex;
std::map<CacheKey, ThresholdSet> g_cache;

}  // namespace

ThresholdSet threshold_set(double msq, const RegulatorParams& params,
                           const QuadratureSpec& spec, int mu2_x_power) {
  if (msq <= -1.0)
    throw DomainError("threshold_set: msq must exceed -1 (symmetric phase)");

  ThresholdSet t;
  t.msq = msq;
  t.params = params;

  const double two_over_pi = 2.0 / kPi;
  t.L21 = affine_eval([](const KernelContext& c) { return g21(c); }, msq,
                      params, spec, mu2_x_power, 1.0, true, two_over_pi);
  t.L22 = affine_eval([](const KernelContext& c) { return g22(c); }, msq,
                      params, spec, mu2_x_power, 1.0, true, two_over_pi);
  auto [d21, d22] = derivative_pair(msq, params, spec, mu2_x_power);
  t.D21 = d21;
  t.D22 = d22;
  t.L31 = affine_eval(&g31, msq, params, spec, mu2_x_power, 1.0, true, 1.0);
  t.L32 = affine_eval(&g32, msq, params, spec, mu2_x_power, 1.0, true, 1.0);
  t.L33 = affine_eval(&g33, msq, params, spec, mu2_x_power, 1.0, true, 1.0);

  KernelContext c{msq, params, 0.0, mu2_x_power};
  t.I1 = radial_frequency_integral(gI1(c), 0.0, kInf, spec).value.real();
  t.W1 = -radial_frequency_integral(gW1(c), 0.0, 1.0, spec).value.real();
  t.W2 = -params.alpha *
         radial_frequency_integral(gW2(c), 0.0, 1.0, spec).value.real();
  return t;
}

std::pair<AffinePair, AffinePair> two_point_loops_shifted(
    double msq, const RegulatorParams& params, const QuadratureSpec& spec,
    double a, int mu2_x_power) {
  // Kernel support moves to s < 1 - a; keep the kink among the breakpoints.
  QuadratureSpec s = spec;
  if (a > 0.0 && a < 1.0) s.x_split.push_back(1.0 - a);
  const double two_over_pi = 2.0 / kPi;
  auto eval = [&](Integrand2D (*make)(const KernelContext&, double)) {
    KernelContext c0{msq, params, 0.0, mu2_x_power};
    KernelContext c1{msq, params, 1.0, mu2_x_power};
    const complex v0 =
        radial_frequency_integral(make(c0, a), 0.0, 1.0, s, true).value;
    const complex v1 =
        radial_frequency_integral(make(c1, a), 0.0, 1.0, s, true).value;
    return AffinePair{two_over_pi * v0, two_over_pi * (v1 - v0)};
  };
  return {eval(&g21), eval(&g22)};
}

std::pair<AffinePair, AffinePair> derivative_pair(
    double msq, const RegulatorParams& params, const QuadratureSpec& spec,
    int mu2_x_power) {
  if (msq <= -1.0)
    throw DomainError("derivative_pair: msq must exceed -1");
  const double pref = -2.0 / kPi;  // reduced identity carries a minus sign
  auto eval = [&](IntegrandFactory make) {
    KernelContext c0{msq, params, 0.0, mu2_x_power};
    KernelContext c1{msq, params, 1.0, mu2_x_power};
    const complex v0 =
        radial_frequency_integral(make(c0), 0.0, 1.0, spec, false).value;
    const complex v1 =
        radial_frequency_integral(make(c1), 0.0, 1.0, spec, false).value;
    return AffinePair{pref * v0, pref * (v1 - v0)};
  };
  auto make21 = [](const KernelContext& c) { return g21(c); };
  auto make22 = [](const KernelContext& c) { return g22(c); };
  return {eval(make21), eval(make22)};
}

ThresholdSet cached_thresholds(double msq, const RegulatorParams& params,
                               const QuadratureSpec& spec, int mu2_x_power) {
  const CacheKey key = make_key(msq, params, spec, mu2_x_power);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  ThresholdSet t = threshold_set(msq, params, spec, mu2_x_power);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(key, t);  // identical values on a racing recompute
  return t;
}

std::size_t threshold_cache_size() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.size();
}

void clear_threshold_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

}  // namespace tgftflow
