// Method-of-lines evolution of the full system on a truncated domain:
// Rusanov flux with unlimited MUSCL reconstruction for the inviscid
// (v,u) part, second-order central diffusion for heat conduction and
// microrotation, SSP-RK3 in time, time-dependent Dirichlet boundaries.
#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpwave/profiles.hpp"
#include "mpwave/thermo.hpp"

namespace mpwave {

struct Grid {
  double L = 100.0;  // domain [-L, L]
  int n = 1024;      // cell count

  double dx() const { return 2.0 * L / n; }
  double x(int i) const { return -L + (i + 0.5) * dx(); }

  void validate() const {
    if (n < 16) throw std::domain_error("Grid: n must be >= 16");
    if (!(L > 0.0)) throw std::domain_error("Grid: L must be > 0");
  }
};

struct SimState {
  double t = 0.0;
  Grid grid;
  GasParams params;
  std::vector<double> v, u, theta, omega;

  static SimState from_profile(const GasParams& g, const Grid& grid,
                               const ProfileField& prof, double t0 = 0.0);
  void check_positive() const;  // throws PositivityError
};

struct PositivityError : std::runtime_error {
  PositivityError(const std::string& msg, SimState snapshot_)
      : std::runtime_error(msg), snapshot(std::move(snapshot_)) {}
  SimState snapshot;
};

// Boundary values as a function of (t, x) at ghost locations.
using BoundaryFn = std::function<ThermoState(double t, double x)>;

BoundaryFn boundary_from_profile(const ProfileField& prof);

// Optional forcing (manufactured-solution source terms), one value per
// equation in (v, u, theta, omega) order.
using ForcingFn =
    std::function<std::array<double, 4>(double t, double x)>;

struct RhsOptions {
  ForcingFn forcing;           // empty: no forcing
  bool freeze_flow = false;    // evolve omega only (test support)
  bool break_conservation = false;  // test-only fault hook: flips the sign
                                    // of the Rusanov dissipation on right
                                    // faces, destroying flux telescoping
};

struct RhsResult {
  std::vector<double> dv, du, dtheta, domega;
  // Boundary fluxes of the conservative (v,u) part, for telescoping checks.
  double flux_v_left = 0, flux_v_right = 0;
  double flux_u_left = 0, flux_u_right = 0;
};

RhsResult spatial_rhs(const SimState& s, const BoundaryFn& bc,
                      const RhsOptions& opt = {});

// |sum(dv) dx - boundary flux difference| + same for u; round-off sized
// for an intact scheme.
double conservation_defect(const SimState& s, const RhsResult& r);

// Discrete omega dissipation rate  A * [sum_faces (dω/dx)^2/v_face +
// sum_i v_i ω_i^2] dx with ghost omega from the boundary.
double omega_dissipation_rate(const SimState& s, const BoundaryFn& bc);

double stable_dt(const SimState& s, double safety = 0.4);

// One SSP-RK3 step; positivity is re-checked after each stage.
SimState step(const SimState& s, double dt, const BoundaryFn& bc,
              const RhsOptions& opt = {});

struct PerturbationSpec {
  double amplitude = 0.0;  // epsilon
  double width = 1.0;      // Gaussian width
  bool in_v = true, in_u = true, in_theta = true, in_omega = true;
};

void apply_perturbation(SimState& s, const PerturbationSpec& p);

struct RunOptions {
  double t_final = 10.0;
  double diag_dt = 0.5;      // diagnostic cadence
  double snapshot_dt = 0.0;  // 0: no snapshots
  double safety = 0.4;
};

struct RunResult {
  double t_end = 0.0;
  double min_v = 0.0, max_v = 0.0, min_theta = 0.0, max_theta = 0.0;
  double initial_sup = 0.0;  // sup-norm of (phi,psi,zeta,omega) at t=0
  double final_sup = 0.0;
  std::vector<double> diag_times;
};

using DiagCallback = std::function<void(const SimState&)>;

// Evolve perturbed composite-wave data; diag_cb fires at the diagnostic
// cadence (including t=0 and the final time), snap_cb at the snapshot
// cadence.
RunResult run(const GasParams& g, const Grid& grid,
              const ProfileField& composite, const PerturbationSpec& pert,
              const RunOptions& opt, const DiagCallback& diag_cb = {},
              const DiagCallback& snap_cb = {});

}  // namespace mpwave
