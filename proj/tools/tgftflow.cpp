// Batch front-end: parse flags/config, dispatch computations, emit JSON/CSV.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tgftflow/equilibrium.hpp"
#include "tgftflow/fixedpoint.hpp"
#include "tgftflow/flow.hpp"
#include "tgftflow/output.hpp"
#include "tgftflow/portrait.hpp"
#include "tgftflow/scan.hpp"
#include "tgftflow/thresholds.hpp"

using nlohmann::ordered_json;
using namespace tgftflow;

namespace {

struct CommonOpts {
  QuadratureSpec spec;
  FlowOptions flow;
  std::string out_path;  // empty: stdout
  std::uint64_t seed = 20240101;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--rel-tol", c.spec.rel_tol, "relative quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--abs-tol", c.spec.abs_tol, "absolute quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--y-map-scale", c.spec.y_map_scale,
                  "frequency compactification scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-evals", c.spec.max_evals,
                  "integrand evaluation budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--mu2-x-power", c.flow.mu2_x_power,
                  "power of x in the mu2 theta term")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  cmd->add_flag_callback(
      "--no-cache", [&c]() { c.flow.use_cache = false; },
      "disable the threshold memoization cache");
  cmd->add_option("--threshold-scale", c.flow.threshold_scale,
                  "uniform constant injected into all thresholds")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Monte-Carlo seed")->capture_default_str();
  cmd->add_option("--out", c.out_path, "output file (default: stdout)");
}

ordered_json config_json(const CommonOpts& c) {
  return ordered_json{{"rel_tol", c.spec.rel_tol},
                      {"abs_tol", c.spec.abs_tol},
                      {"y_map_scale", c.spec.y_map_scale},
                      {"max_evals", c.spec.max_evals},
                      {"mu2_x_power", c.flow.mu2_x_power},
                      {"use_cache", c.flow.use_cache},
                      {"threshold_scale", c.flow.threshold_scale},
                      {"seed", c.seed}};
}

ordered_json pair_json(const AffinePair& p) {
  return ordered_json{{"c0", p.c0.real()}, {"c1", p.c1.real()}};
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json wrap(const CommonOpts& c, ordered_json extra_config,
                  ordered_json result) {
  ordered_json cfg = config_json(c);
  for (auto& [k, v] : extra_config.items()) cfg[k] = v;
  return ordered_json{{"schema_version", kSchemaVersion},
                      {"build_id", build_id()},
                      {"config", cfg},
                      {"result", result}};
}

ordered_json report_json(const FixedPointReport& r) {
  return ordered_json{
      {"msq_star", r.state.msq},
      {"lam_star", r.state.lam},
      {"eta_star", r.eta_star},
      {"re_theta", r.theta[0].real()},
      {"im_theta", r.theta[0].imag()},
      {"jacobian", {r.jacobian[0][0], r.jacobian[0][1], r.jacobian[1][0],
                    r.jacobian[1][1]}},
      {"residual", r.residual},
      {"iterations", r.iterations}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonperturbative RG flow solver for a stochastic rank-5 "
               "tensorial field theory"};
  app.set_config("--config", "", "flat key=value configuration file");
  app.require_subcommand(1);

  int exit_code = 0;
  auto run = [&](auto&& fn) {
    try {
      fn();
    } catch (const SingularEta& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      exit_code = 3;
    } catch (const NonConvergence& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      exit_code = 3;
    } catch (const NoConvergence& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      exit_code = 3;
    } catch (const LeftPhysicalRegion& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      exit_code = 3;
    } catch (const IterationDiverged& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      exit_code = 3;
    } catch (const EmptyResult& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      exit_code = 3;
    } catch (const DomainError& e) {
      std::cerr << "validation error: " << e.what() << "\n";
      exit_code = 2;
    } catch (const CutoffTooSmall& e) {
      std::cerr << "validation error: " << e.what() << "\n";
      exit_code = 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 3;
    }
  };

  // ---- integrals ----
  CommonOpts ci;
  double i_alpha = 1.0, i_beta = 0.0, i_msq = 0.0;
  auto* integrals = app.add_subcommand(
      "integrals", "threshold integrals at fixed (msq; alpha, beta_hat)");
  integrals->add_option("--alpha", i_alpha)->check(CLI::PositiveNumber);
  integrals->add_option("--beta-hat", i_beta)->check(CLI::NonNegativeNumber);
  integrals->add_option("--msq", i_msq)->check(CLI::Range(-0.999999, 1e9));
  add_common(integrals, ci);
  integrals->callback([&] {
    run([&] {
      const ThresholdSet t = ci.flow.use_cache
          ? cached_thresholds(i_msq, {i_alpha, i_beta}, ci.spec, ci.flow.mu2_x_power)
          : threshold_set(i_msq, {i_alpha, i_beta}, ci.spec, ci.flow.mu2_x_power);
      ordered_json r{{"L21", pair_json(t.L21)}, {"L22", pair_json(t.L22)},
                     {"D21", pair_json(t.D21)}, {"D22", pair_json(t.D22)},
                     {"L31", pair_json(t.L31)}, {"L32", pair_json(t.L32)},
                     {"L33", pair_json(t.L33)}, {"I1", t.I1},
                     {"W1", t.W1},             {"W2", t.W2}};
      emit(ci.out_path, dump(wrap(ci,
          {{"alpha", i_alpha}, {"beta_hat", i_beta}, {"msq", i_msq}}, r)));
    });
  });

  // ---- betas ----
  CommonOpts cb;
  double b_alpha = 1.0, b_beta = 0.0, b_msq = 0.0, b_lam = 0.0;
  auto* betas = app.add_subcommand("betas", "beta functions at a state");
  betas->add_option("--alpha", b_alpha)->check(CLI::PositiveNumber);
  betas->add_option("--beta-hat", b_beta)->check(CLI::NonNegativeNumber);
  betas->add_option("--msq", b_msq)->check(CLI::Range(-0.999999, 1e9));
  betas->add_option("--lam", b_lam);
  add_common(betas, cb);
  betas->callback([&] {
    run([&] {
      const BetaVector b =
          beta_functions({b_msq, b_lam}, {b_alpha, b_beta}, cb.spec, cb.flow);
      ordered_json r{{"beta_msq", b.beta_msq}, {"beta_lam", b.beta_lam},
                     {"eta", b.eta},           {"kappa_bar", b.kappa_bar},
                     {"lam_prime", b.lam_prime}};
      emit(cb.out_path, dump(wrap(cb,
          {{"alpha", b_alpha}, {"beta_hat", b_beta}, {"msq", b_msq},
           {"lam", b_lam}}, r)));
    });
  });

  // ---- fixed-point ----
  CommonOpts cf;
  double f_alpha = 4.0, f_beta = 0.0;
  double f_gm = 0.0, f_gl = -1.0;  // guess; lam < 0 means grid search
  double f_lam_max = 0.1;
  auto* fixed = app.add_subcommand("fixed-point",
                                   "locate a non-Gaussian fixed point");
  fixed->add_option("--alpha", f_alpha)->check(CLI::PositiveNumber);
  fixed->add_option("--beta-hat", f_beta)->check(CLI::NonNegativeNumber);
  fixed->add_option("--guess-msq", f_gm);
  fixed->add_option("--guess-lam", f_gl);
  fixed->add_option("--lam-max", f_lam_max, "grid-search coupling ceiling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(fixed, cf);
  fixed->callback([&] {
    run([&] {
      FixedPointReport rep;
      if (f_gl > 0.0) {
        rep = find_fixed_point({f_alpha, f_beta}, {f_gm, f_gl}, cf.spec,
                               cf.flow);
      } else {
        GridSearchConfig g;
        g.lam_hi = f_lam_max;
        auto roots = find_fixed_points({f_alpha, f_beta}, cf.spec, cf.flow, g);
        if (roots.empty())
          throw NoConvergence("no non-Gaussian fixed point located");
        rep = roots.front();
      }
      emit(cf.out_path, dump(wrap(cf,
          {{"alpha", f_alpha}, {"beta_hat", f_beta}}, report_json(rep))));
    });
  });

  // ---- scan ----
  CommonOpts cs;
  double s_alo = 2.0, s_ahi = 5.0, s_blo = 0.05, s_bhi = 0.5;
  int s_na = 15, s_nb = 10;
  double s_lam_max = 0.1;
  std::string s_stationary;
  auto* scan = app.add_subcommand("scan",
                                  "fixed-point observables over an "
                                  "(alpha, beta_hat) grid, CSV output");
  scan->add_option("--alpha-min", s_alo)->check(CLI::Range(1e-9, 10.0));
  scan->add_option("--alpha-max", s_ahi)->check(CLI::Range(1e-9, 10.0));
  scan->add_option("--alpha-count", s_na)->check(CLI::Range(1, 10000));
  scan->add_option("--beta-min", s_blo)->check(CLI::Range(0.0, 2.0));
  scan->add_option("--beta-max", s_bhi)->check(CLI::Range(0.0, 2.0));
  scan->add_option("--beta-count", s_nb)->check(CLI::Range(1, 10000));
  scan->add_option("--lam-max", s_lam_max)->check(CLI::PositiveNumber);
  scan->add_option("--stationary", s_stationary,
                   "also report stationary points of an observable "
                   "(eta|re-theta|im-theta) as JSON on stderr-free stdout");
  add_common(scan, cs);
  scan->callback([&] {
    run([&] {
      GridSearchConfig g;
      g.lam_hi = s_lam_max;
      const ScanGrid grid = msp_scan(s_alo, s_ahi, s_na, s_blo, s_bhi, s_nb,
                                     cs.spec, cs.flow, g);
      emit(cs.out_path, scan_to_csv(grid));
      if (!s_stationary.empty()) {
        std::function<double(const FixedPointReport&)> obs;
        if (s_stationary == "eta")
          obs = [](const FixedPointReport& r) { return r.eta_star; };
        else if (s_stationary == "re-theta")
          obs = [](const FixedPointReport& r) { return r.theta[0].real(); };
        else if (s_stationary == "im-theta")
          obs = [](const FixedPointReport& r) { return r.theta[0].imag(); };
        else
          throw DomainError("unknown observable: " + s_stationary);
        auto pts = stationary_points(grid, obs);
        ordered_json arr = ordered_json::array();
        for (const auto& p : pts)
          arr.push_back({{"alpha", p.alpha},
                         {"beta_hat", p.beta_hat},
                         {"value", p.value},
                         {"kind", p.kind == StationaryKind::Minimum ? "min"
                                  : p.kind == StationaryKind::Maximum
                                      ? "max"
                                      : "saddle"}});
        std::cout << dump(wrap(cs, {{"observable", s_stationary}}, arr));
      }
    });
  });

  // ---- portrait ----
  CommonOpts cp;
  double p_alpha = 1.0, p_beta = 0.0, p_msq = 0.1, p_lam = 0.01;
  std::string p_dir = "uv";
  double p_budget = 10.0;
  auto* portrait = app.add_subcommand(
      "portrait", "integrate an RG trajectory, CSV (t,msq,lam,eta)");
  portrait->add_option("--alpha", p_alpha)->check(CLI::PositiveNumber);
  portrait->add_option("--beta-hat", p_beta)->check(CLI::NonNegativeNumber);
  portrait->add_option("--msq", p_msq)->check(CLI::Range(-0.999999, 1e9));
  portrait->add_option("--lam", p_lam);
  portrait->add_option("--direction", p_dir)->check(CLI::IsMember({"uv", "ir"}));
  portrait->add_option("--t-budget", p_budget)->check(CLI::PositiveNumber);
  add_common(portrait, cp);
  portrait->callback([&] {
    run([&] {
      TrajectoryOptions topt;
      topt.t_budget = p_budget;
      const TrajectoryRecord rec = integrate_trajectory(
          {p_msq, p_lam},
          p_dir == "uv" ? Direction::TowardUV : Direction::TowardIR,
          {p_alpha, p_beta}, cp.spec, cp.flow, topt);
      std::ostringstream os;
      os.precision(17);
      os << "t,msq,lam,eta\n";
      for (const auto& s : rec.samples)
        os << s.t << ',' << s.state.msq << ',' << s.state.lam << ',' << s.eta
           << '\n';
      emit(cp.out_path, os.str());
    });
  });

  // ---- region-map ----
  CommonOpts cr;
  double r_mlo = -0.5, r_mhi = 1.0, r_llo = 0.0, r_lhi = 0.05;
  int r_nm = 30, r_nl = 30;
  double r_alpha = 1.0, r_beta = 0.0;
  auto* region = app.add_subcommand(
      "region-map", "classify (msq, lam) cells by the eta denominator sign");
  region->add_option("--alpha", r_alpha)->check(CLI::PositiveNumber);
  region->add_option("--beta-hat", r_beta)->check(CLI::NonNegativeNumber);
  region->add_option("--msq-min", r_mlo)->check(CLI::Range(-0.999999, 1e9));
  region->add_option("--msq-max", r_mhi);
  region->add_option("--lam-min", r_llo);
  region->add_option("--lam-max", r_lhi);
  region->add_option("--msq-count", r_nm)->check(CLI::Range(2, 10000));
  region->add_option("--lam-count", r_nl)->check(CLI::Range(2, 10000));
  add_common(region, cr);
  region->callback([&] {
    run([&] {
      const RegionMap map =
          region_map(r_mlo, r_mhi, r_llo, r_lhi, r_nm, r_nl,
                     {r_alpha, r_beta}, cr.spec, cr.flow);
      std::ostringstream os;
      os.precision(17);
      os << "msq,lam,class\n";
      for (int j = 0; j < map.n_lam; ++j)
        for (int i = 0; i < map.n_msq; ++i) {
          const double msq =
              map.msq_lo + (map.msq_hi - map.msq_lo) * i / (map.n_msq - 1);
          const double lam =
              map.lam_lo + (map.lam_hi - map.lam_lo) * j / (map.n_lam - 1);
          const RegionClass c = map.cells[(size_t)j * map.n_msq + i];
          os << msq << ',' << lam << ','
             << (c == RegionClass::Physical
                     ? "physical"
                     : c == RegionClass::Singular ? "singular" : "wall")
             << '\n';
        }
      emit(cr.out_path, os.str());
    });
  });

  // ---- equilibrium ----
  CommonOpts ce;
  double e_msq = 0.0, e_lam = 0.0;
  bool e_constrained = false;
  auto* equil = app.add_subcommand(
      "equilibrium", "closed-form flow of the equilibrium companion model");
  equil->add_option("--msq", e_msq)->check(CLI::Range(-0.999999, 1e9));
  equil->add_option("--lam", e_lam);
  equil->add_flag("--constrained", e_constrained,
                  "use the Ward-constrained variant");
  add_common(equil, ce);
  equil->callback([&] {
    run([&] {
      const EqBeta b = e_constrained ? eq_beta_constrained({e_msq, e_lam})
                                     : eq_beta_truncation({e_msq, e_lam});
      ordered_json r{{"beta_msq", b.beta_msq},
                     {"beta_lam", b.beta_lam},
                     {"eta", b.eta}};
      if (e_constrained) r["constraint_residual"] = b.constraint_residual;
      emit(ce.out_path, dump(wrap(ce,
          {{"msq", e_msq}, {"lam", e_lam}, {"constrained", e_constrained}},
          r)));
    });
  });

  // ---- sd ----
  CommonOpts cd;
  double d_lam = 1e-3, d_damping = 0.5, d_mrsq = 1.0;
  int d_cutoff = 20;
  std::string d_csv;
  auto* sd = app.add_subcommand(
      "sd", "melonic Schwinger-Dyson self-energy on the cutoff lattice");
  sd->add_option("--lam-r", d_lam);
  sd->add_option("--cutoff", d_cutoff)->check(CLI::Range(5, 100));
  sd->add_option("--damping", d_damping)->check(CLI::Range(1e-9, 1.0));
  sd->add_option("--m-rsq", d_mrsq)->check(CLI::PositiveNumber);
  sd->add_option("--csv", d_csv, "also write (p^2, sigma_r) CSV here");
  add_common(sd, cd);
  sd->callback([&] {
    run([&] {
      const SDSolution sol = sd_solve_sigma(d_lam, d_cutoff, d_damping, d_mrsq);
      const SDRenormalization rn = sd_renormalization_factors(sol);
      ordered_json r{{"a_infty", sol.a_infty},
                     {"z_lambda", rn.z_lambda},
                     {"z_infty", rn.z_infty},
                     {"identity_residual", rn.identity_residual},
                     {"cutoff", sol.cutoff},
                     {"lam_r", sol.lam_r},
                     {"m_rsq", sol.m_rsq},
                     {"sweeps", sol.sweeps}};
      emit(cd.out_path, dump(wrap(cd,
          {{"lam_r", d_lam}, {"cutoff", d_cutoff}, {"damping", d_damping},
           {"m_rsq", d_mrsq}}, r)));
      if (!d_csv.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "psq,sigma_r\n";
        for (size_t p = 0; p < sol.sigma_r.size(); ++p)
          os << p * p << ',' << sol.sigma_r[p] << '\n';
        write_file(d_csv, os.str());
      }
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage/validation errors exit 2
  }
  return exit_code;
}
