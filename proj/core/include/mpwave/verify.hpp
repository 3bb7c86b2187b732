// Property-verification suite: each check exercises one acceptance
// property of the composite-wave construction or the solver and returns
// a machine-readable verdict.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mpwave/diagnostics.hpp"
#include "mpwave/profiles.hpp"
#include "mpwave/solver.hpp"

namespace mpwave {

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json details;
};

// Default pattern used by the decay/localization/stability checks:
// left (1,0,1), gamma=5/3, R=kappa=A=1, symmetric rarefactions of
// strength 0.15 in v and contact ratio 1.1, so delta = 0.1 exactly.
GasParams default_gas();
WavePattern default_pattern(const GasParams& g);

CheckResult check_heat_kernel();
CheckResult check_burgers();
CheckResult check_selfsimilar();
CheckResult check_riemann_roundtrip();
CheckResult check_composite_residual_decay();
CheckResult check_solver_correctness();
CheckResult check_localization();

struct StabilityOptions {
  double epsilon = 1e-2;
  double L = 150.0;
  int n = 4096;
  double t_final = 200.0;
};
CheckResult check_stability_experiment(const StabilityOptions& opt = {});

struct VerifyOptions {
  bool include_stability = true;  // the long-running experiment
  StabilityOptions stability;
};
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt = {});

// ---- oracles and test supports ---------------------------------------

// Independent Burgers oracle: conservative MUSCL (minmod) finite-volume
// scheme with Godunov flux on [-X, X]; returns solution snapshots at the
// requested times, sampled by linear interpolation.
class BurgersFvOracle {
 public:
  BurgersFvOracle(double w_l, double w_r, double X, int n);
  // Advance to time t (monotone increasing calls) and sample at x.
  void advance_to(double t);
  double sample(double x) const;

 private:
  void step(double dt);
  double X_, dx_, t_ = 0.0;
  std::vector<double> w_;
};

// Manufactured solution with analytic derivatives and the forcing that
// makes it an exact solution of the full system.
struct ManufacturedSolution {
  GasParams gas;
  double v0 = 1.5, th0 = 1.0, amp = 0.1, k = M_PI, freq = 1.0;

  ThermoState state(double t, double x) const;
  std::array<double, 4> forcing(double t, double x) const;
  BoundaryFn boundary() const;
  ForcingFn forcing_fn() const;
};

}  // namespace mpwave
