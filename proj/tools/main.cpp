// Command-line front end: riemann | profile | simulate | verify.
//
// Exit codes: 0 success, 1 failure (including failed verification checks),
// 2 requested end states do not form a rarefaction/contact pattern.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpwave/config.hpp"
#include "mpwave/diagnostics.hpp"
#include "mpwave/verify.hpp"

namespace fs = std::filesystem;
using namespace mpwave;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--config", a.config_path, "Run configuration (JSON)");
  cmd->add_option("--out", a.out_dir, "Output directory");
  cmd->add_option("--override", a.overrides,
                  "Dotted-path config override, KEY=VALUE (repeatable)");
}

RunConfig resolve_config(const CommonArgs& a, bool needs_pattern = true) {
  json j = json::object();
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in)
      throw std::runtime_error("cannot open config file: " + a.config_path);
    in >> j;
  }
  for (const auto& ov : a.overrides) apply_override(j, ov);
  RunConfig cfg = config_from_json(j);
  if (needs_pattern) cfg.validate();
  return cfg;
}

fs::path resolve_out(const CommonArgs& a, const RunConfig& cfg) {
  // Precedence: --out, then MPWAVE_OUT_DIR, then the config file.
  std::string dir = cfg.output.directory;
  if (const char* env = std::getenv("MPWAVE_OUT_DIR"); env && *env)
    dir = env;
  if (!a.out_dir.empty()) dir = a.out_dir;
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

json state_json(const ThermoState& s) {
  return json{{"v", s.v}, {"u", s.u}, {"theta", s.theta}};
}

json pattern_json(const GasParams& g, const WavePattern& pat) {
  json j;
  j["end_states"] = {{"left", state_json(pat.end.left)},
                     {"right", state_json(pat.end.right)}};
  j["mid_left"] = state_json(pat.mid_left);
  j["mid_right"] = state_json(pat.mid_right);
  j["p_mid"] = pat.p_mid;
  j["delta"] = pat.delta;
  j["strengths"] = {pat.strengths[0], pat.strengths[1], pat.strengths[2]};
  j["strength_ratio"] = pat.strength_ratio;
  j["lambda_minus_mid"] =
      char_speed(g, pat.mid_left.v, pat.mid_left.theta, Family::minus);
  j["lambda_plus_mid"] =
      char_speed(g, pat.mid_right.v, pat.mid_right.theta, Family::plus);
  j["admissible"] = true;  // construction throws otherwise
  return j;
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

int cmd_riemann(const CommonArgs& a) {
  const RunConfig cfg = resolve_config(a);
  const fs::path out = resolve_out(a, cfg);
  const WavePattern pat = make_pattern(cfg);
  const json j = pattern_json(cfg.gas, pat);
  std::cout << j.dump(2) << "\n";
  write_json(out / "pattern.json", j);
  return 0;
}

int cmd_profile(const CommonArgs& a, const std::vector<double>& times) {
  const RunConfig cfg = resolve_config(a);
  const fs::path out = resolve_out(a, cfg);
  const WavePattern pat = make_pattern(cfg);
  const CompositeWave w = build_composite(cfg.gas, pat, cfg.profiles);

  std::vector<double> ts = times;
  if (ts.empty()) ts = {0.0, cfg.time.t_final};

  std::ofstream csv(out / "profile.csv");
  csv << "t,x,V,U,Theta,V_x,U_x,Theta_x\n";
  for (double t : ts) {
    for (int i = 0; i < cfg.grid.n; ++i) {
      const double x = cfg.grid.x(i);
      const ProfilePoint p = w.field(t, x);
      csv << format_double(t) << ',' << format_double(x) << ','
          << format_double(p.V) << ',' << format_double(p.U) << ','
          << format_double(p.Th) << ',' << format_double(p.Vx) << ','
          << format_double(p.Ux) << ',' << format_double(p.Thx) << '\n';
    }
  }
  write_json(out / "pattern.json", pattern_json(cfg.gas, pat));
  std::cout << "wrote " << (out / "profile.csv").string() << "\n";
  return 0;
}

void write_norms_header(std::ofstream& csv) {
  csv << "t,sup_phi,sup_psi,sup_zeta,sup_omega"
      << ",l2_phi,l2_psi,l2_zeta,l2_omega"
      << ",h1_phi,h1_psi,h1_zeta,h1_omega"
      << ",h2_phi,h2_psi,h2_zeta,h2_omega"
      << ",weighted_integral,entropy,omega_dissipation,conservation_defect\n";
}

void write_norms_row(std::ofstream& csv, const NormReport& r) {
  const double* vals[] = {
      &r.t,       &r.sup_phi, &r.sup_psi, &r.sup_zeta, &r.sup_omega,
      &r.l2_phi,  &r.l2_psi,  &r.l2_zeta, &r.l2_omega, &r.h1_phi,
      &r.h1_psi,  &r.h1_zeta, &r.h1_omega, &r.h2_phi,  &r.h2_psi,
      &r.h2_zeta, &r.h2_omega, &r.weighted_integral, &r.entropy,
      &r.omega_dissipation, &r.conservation_defect};
  bool first = true;
  for (const double* v : vals) {
    if (!first) csv << ',';
    csv << format_double(*v);
    first = false;
  }
  csv << '\n';
}

int cmd_simulate(const CommonArgs& a) {
  const RunConfig cfg = resolve_config(a);
  const fs::path out = resolve_out(a, cfg);
  const WavePattern pat = make_pattern(cfg);
  const CompositeWave w = build_composite(cfg.gas, pat, cfg.profiles);

  KernelWeight kernel;
  if (cfg.diagnostics.alpha > 0.0) {
    kernel.alpha = cfg.diagnostics.alpha;
  } else {
    // default: the fitted Gaussian-tail rate of the contact profile
    kernel.alpha = fit_gaussian_tail(w.selfsimilar).second;
    if (!(kernel.alpha > 0.0)) kernel.alpha = 1.0;
  }

  RunOptions ropt;
  ropt.t_final = cfg.time.t_final;
  ropt.diag_dt = cfg.time.diag_cadence;
  ropt.snapshot_dt = cfg.time.snapshot_cadence;
  ropt.safety = cfg.time.safety;

  std::ofstream norms_csv(out / "norms.csv");
  write_norms_header(norms_csv);
  std::vector<NormReport> reports;
  int snap_index = 0;

  const RunResult rr = run(
      cfg.gas, cfg.grid, w.field, cfg.perturbation, ropt,
      [&](const SimState& s) {
        const NormReport r = make_norm_report(s, w.field, kernel);
        reports.push_back(r);
        write_norms_row(norms_csv, r);
      },
      [&](const SimState& s) {
        std::ostringstream name;
        name << "snapshot_" << std::setw(4) << std::setfill('0')
             << snap_index++ << ".csv";
        std::ofstream snap(out / name.str());
        snap << "x,v,u,theta,omega,V,U,Theta\n";
        for (int i = 0; i < s.grid.n; ++i) {
          const double x = s.grid.x(i);
          const ProfilePoint p = w.field(s.t, x);
          snap << format_double(x) << ',' << format_double(s.v[i]) << ','
               << format_double(s.u[i]) << ',' << format_double(s.theta[i])
               << ',' << format_double(s.omega[i]) << ','
               << format_double(p.V) << ',' << format_double(p.U) << ','
               << format_double(p.Th) << '\n';
        }
      });

  json summary;
  summary["config"] = config_to_json(cfg);
  summary["pattern"] = pattern_json(cfg.gas, pat);
  summary["kernel_alpha"] = kernel.alpha;
  summary["result"] = {{"t_end", rr.t_end},
                       {"min_v", rr.min_v},
                       {"max_v", rr.max_v},
                       {"min_theta", rr.min_theta},
                       {"max_theta", rr.max_theta},
                       {"initial_sup", rr.initial_sup},
                       {"final_sup", rr.final_sup},
                       {"snapshots", snap_index}};
  // decay fit of the omega L2 norm after the initial transient
  std::vector<std::pair<double, double>> omega_series;
  for (const NormReport& r : reports)
    if (r.t >= 1.0 && r.l2_omega > 0.0)
      omega_series.emplace_back(r.t, r.l2_omega);
  if (omega_series.size() >= 4) {
    const FitResult f = fit_decay(omega_series);
    summary["fits"]["omega_l2"] = {
        {"slope", f.slope}, {"intercept", f.intercept}, {"r2", f.r2}};
  }
  write_json(out / "summary.json", summary);
  std::cout << summary["result"].dump(2) << "\n";
  return 0;
}

int cmd_verify(const CommonArgs& a, bool skip_stability) {
  // The verification suite fixes its own parameters; the config is only
  // consulted for the output directory.
  const RunConfig cfg = resolve_config(a, /*needs_pattern=*/false);
  const fs::path out = resolve_out(a, cfg);

  VerifyOptions opt;
  opt.include_stability = !skip_stability;
  const std::vector<CheckResult> checks = run_all_checks(opt);

  json report = json::array();
  bool all_ok = true;
  for (const CheckResult& c : checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
    all_ok = all_ok && c.passed;
    report.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
  }
  write_json(out / "verify.json", report);
  std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite-wave laboratory for the 1D micropolar gas model"};
  app.require_subcommand(1);

  CommonArgs ra, pa, sa, va;
  std::vector<double> profile_times;
  bool skip_stability = false;

  CLI::App* riemann =
      app.add_subcommand("riemann", "Solve the wave pattern middle states");
  add_common(riemann, ra);

  CLI::App* profile =
      app.add_subcommand("profile", "Dump the composite profile as CSV");
  add_common(profile, pa);
  profile->add_option("--times", profile_times,
                      "Evaluation times (default: 0 and t_final)");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Evolve perturbed composite-wave data");
  add_common(simulate, sa);

  CLI::App* verify =
      app.add_subcommand("verify", "Run the property-verification suite");
  add_common(verify, va);
  verify->add_flag("--skip-stability", skip_stability,
                   "Skip the long-running stability experiment");

  CLI11_PARSE(app, argc, argv);

  try {
    if (riemann->parsed()) return cmd_riemann(ra);
    if (profile->parsed()) return cmd_profile(pa, profile_times);
    if (simulate->parsed()) return cmd_simulate(sa);
    if (verify->parsed()) return cmd_verify(va, skip_stability);
  } catch (const PatternMismatchError& e) {
    std::cerr << "pattern mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
