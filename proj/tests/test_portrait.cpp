#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tgftflow/portrait.hpp"

using namespace tgftflow;
using std::numbers::pi;

TEST_CASE("free line law within 1e-6 over a unit of flow time") {
  // On lam = 0 the flow is d(msq)/dt = -2 msq toward the UV, so
  // msq(t) = msq0 * exp(-2t) (and exp(+2t) toward the IR).
  QuadratureSpec spec;
  RegulatorParams p{2.0, 0.4};
  TrajectoryOptions traj;
  traj.t_budget = 1.0;
  traj.local_err = 1e-10;
  for (auto dir : {Direction::TowardUV, Direction::TowardIR}) {
    auto rec = integrate_trajectory({0.5, 0.0}, dir, p, spec, {}, traj);
    const double sign = (dir == Direction::TowardUV) ? -2.0 : 2.0;
    for (const auto& s : rec.samples) {
      const double exact = 0.5 * std::exp(sign * s.t);
      CHECK(std::abs(s.state.msq - exact) <= 1e-6 * (1.0 + exact));
      CHECK(s.state.lam == 0.0);
      CHECK(s.eta == 0.0);
    }
  }
}

TEST_CASE("stationarity at the free theory") {
  QuadratureSpec spec;
  TrajectoryOptions traj;
  traj.t_budget = 5.0;
  auto rec = integrate_trajectory({0.0, 0.0}, Direction::TowardIR, {1.0, 0.0},
                                  spec, {}, traj);
  for (const auto& s : rec.samples) {
    CHECK(std::abs(s.state.msq) < 1e-10);
    CHECK(std::abs(s.state.lam) < 1e-10);
  }
}

TEST_CASE("UV-then-IR reversibility") {
  QuadratureSpec spec;
  RegulatorParams p{2.0, 0.3};
  TrajectoryOptions traj;
  traj.t_budget = 0.5;
  traj.local_err = 1e-10;
  const FlowState start{0.3, 0.005};
  auto up = integrate_trajectory(start, Direction::TowardUV, p, spec, {}, traj);
  REQUIRE(up.termination == Termination::TBudget);
  const FlowState mid = up.samples.back().state;
  auto down = integrate_trajectory(mid, Direction::TowardIR, p, spec, {}, traj);
  REQUIRE(down.termination == Termination::TBudget);
  const FlowState back = down.samples.back().state;
  CHECK(std::abs(back.msq - start.msq) < 1e-5);
  CHECK(std::abs(back.lam - start.lam) < 1e-5);
}

TEST_CASE("trajectory samples are strictly monotone in t and bounded") {
  QuadratureSpec spec;
  TrajectoryOptions traj;
  traj.t_budget = 2.0;
  auto rec = integrate_trajectory({0.4, 0.002}, Direction::TowardIR, {1.5, 0.2},
                                  spec, {}, traj);
  for (size_t i = 1; i < rec.samples.size(); ++i)
    CHECK(rec.samples[i].t > rec.samples[i - 1].t);
  CHECK((int)rec.samples.size() <= traj.max_samples);
}

TEST_CASE("box exit terminates the integration") {
  QuadratureSpec spec;
  TrajectoryOptions traj;
  traj.t_budget = 10.0;
  traj.box_msq_hi = 1.0;
  // toward-IR growth of msq from the free line crosses the box wall
  auto rec = integrate_trajectory({0.5, 0.0}, Direction::TowardIR, {1.0, 0.0},
                                  spec, {}, traj);
  CHECK(rec.termination == Termination::BoxExit);
  // the final sample is the first one beyond the wall; its predecessor is
  // still inside
  CHECK(rec.samples.back().state.msq >= 1.0);
  REQUIRE(rec.samples.size() >= 2);
  CHECK(rec.samples[rec.samples.size() - 2].state.msq <= 1.0);
}

TEST_CASE("a start outside the box is rejected immediately") {
  QuadratureSpec spec;
  TrajectoryOptions traj;
  traj.box_msq_hi = 1.0;
  CHECK_THROWS_AS(integrate_trajectory({2.0, 0.0}, Direction::TowardIR,
                                       {1.0, 0.0}, spec, {}, traj),
                  ImmediateTermination);
}

TEST_CASE("region map: physical everywhere on the probed windows") {
  // The eta denominator stays positive on the domains probed here (the
  // Ward-loop contribution keeps it clear of zero); the classification must
  // say so and be stable under grid refinement.
  QuadratureSpec spec;
  spec.rel_tol = 1e-7;
  RegulatorParams p{1.0, 0.0};
  auto rm = region_map(-0.9, 1.0, 0.0, 0.05, 8, 6, p, spec);
  REQUIRE(rm.cells.size() == 48);
  for (auto c : rm.cells) CHECK(c == RegionClass::Physical);

  auto rm2 = region_map(-0.9, 1.0, 0.0, 0.05, 16, 12, p, spec);
  for (auto c : rm2.cells) CHECK(c == RegionClass::Physical);
}

TEST_CASE("separatrix branches leave the fixed point anti-parallel") {
  // Launch geometry check: with a prescribed jacobian whose least-stable
  // direction points (mostly) along the mass axis, the two eps-branches
  // launched from the free theory must move in opposite directions under
  // the linearized flow.  (The true jacobian at the free theory is
  // degenerate along the coupling axis, where the quadratic term makes both
  // branches drift the same way, so a hyperbolic surrogate is prescribed.)
  QuadratureSpec spec;
  RegulatorParams p{1.0, 0.0};
  FixedPointReport fp;
  fp.state = {0.0, 0.0};
  fp.jacobian = {{{1.0, 0.1}, {0.1, -3.0}}};
  fp.theta = critical_exponents(fp.jacobian);

  TrajectoryOptions traj;
  traj.t_budget = 0.2;
  traj.box_lam_lo = -1.0;
  auto [plus, minus] = trace_separatrix(fp, p, spec, {}, traj, 1e-4);
  REQUIRE(plus.samples.size() >= 2);
  REQUIRE(minus.samples.size() >= 2);
  const auto& p1 = plus.samples.front().state;
  const auto& p2 = plus.samples.back().state;
  const auto& m1 = minus.samples.front().state;
  const auto& m2 = minus.samples.back().state;
  const double dp[2] = {p2.msq - p1.msq, p2.lam - p1.lam};
  const double dm[2] = {m2.msq - m1.msq, m2.lam - m1.lam};
  const double dot = dp[0] * dm[0] + dp[1] * dm[1];
  const double np = std::hypot(dp[0], dp[1]), nm = std::hypot(dm[0], dm[1]);
  REQUIRE(np > 0.0);
  REQUIRE(nm > 0.0);
  CHECK(dot / (np * nm) < -0.99);

  // halving eps halves the launch offset
  auto [plus2, minus2] = trace_separatrix(fp, p, spec, {}, traj, 5e-5);
  const double off1 = std::hypot(plus.samples.front().state.msq,
                                 plus.samples.front().state.lam);
  const double off2 = std::hypot(plus2.samples.front().state.msq,
                                 plus2.samples.front().state.lam);
  CHECK(off2 == doctest::Approx(0.5 * off1).epsilon(1e-10));
}
