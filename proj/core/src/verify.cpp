#include "mpwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mpwave {

using ordered_json = nlohmann::ordered_json;

GasParams default_gas() {
  GasParams g;
  g.R = 1.0;
  g.gamma = 5.0 / 3.0;
  g.kappa = 1.0;
  g.A = 1.0;
  g.B = 1.0;
  return g;
}

WavePattern default_pattern(const GasParams& g) {
  // Symmetric rarefaction strengths make theta_+ = ratio * theta_-, so the
  // total strength delta is exactly 0.1.
  return forward_construct(g, ThermoState{1.0, 0.0, 1.0, 0.0}, 0.15, 1.1,
                           0.15);
}

// ---------------------------------------------------------------- kernel

CheckResult check_heat_kernel() {
  CheckResult res;
  res.name = "heat-kernel identities";
  double worst_sup = 0.0, worst_id = 0.0;
  for (double alpha : {0.25, 1.0, 4.0}) {
    KernelWeight w{alpha};
    const auto rep = kernel_check(w, {0.0, 1.0, 10.0});
    worst_sup = std::max(worst_sup, rep.sup_g_error);
    worst_id = std::max(worst_id, rep.identity_residual);
  }
  res.details["sup_g_rel_error"] = worst_sup;
  res.details["identity_residual"] = worst_id;
  res.passed = worst_sup <= 1e-6 && worst_id <= 1e-8;
  return res;
}

// --------------------------------------------------------------- burgers

BurgersFvOracle::BurgersFvOracle(double w_l, double w_r, double X, int n)
    : X_(X), dx_(2.0 * X / n), w_(n) {
  for (int i = 0; i < n; ++i) {
    const double x = -X + (i + 0.5) * dx_;
    w_[i] = 0.5 * (w_r + w_l) + 0.5 * (w_r - w_l) * std::tanh(x);
  }
}

namespace {

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

double godunov_flux(double wl, double wr) {
  auto f = [](double w) { return 0.5 * w * w; };
  if (wl > wr) return 0.5 * (wl + wr) > 0.0 ? f(wl) : f(wr);
  if (wl > 0.0) return f(wl);
  if (wr < 0.0) return f(wr);
  return 0.0;
}

std::vector<double> burgers_rhs(const std::vector<double>& w, double dx) {
  const int n = static_cast<int>(w.size());
  std::vector<double> d(n, 0.0);
  auto at = [&](int i) { return w[std::clamp(i, 0, n - 1)]; };
  double flux_prev = 0.0;
  for (int f = 0; f <= n; ++f) {
    const double sl = minmod(at(f - 1) - at(f - 2), at(f) - at(f - 1));
    const double sr = minmod(at(f) - at(f - 1), at(f + 1) - at(f));
    const double wl = at(f - 1) + 0.5 * sl;
    const double wr = at(f) - 0.5 * sr;
    const double flux = godunov_flux(wl, wr);
    if (f > 0) d[f - 1] = -(flux - flux_prev) / dx;
    flux_prev = flux;
  }
  return d;
}

}  // namespace

void BurgersFvOracle::step(double dt) {
  const int n = static_cast<int>(w_.size());
  const auto k1 = burgers_rhs(w_, dx_);
  std::vector<double> w1(n);
  for (int i = 0; i < n; ++i) w1[i] = w_[i] + dt * k1[i];
  const auto k2 = burgers_rhs(w1, dx_);
  for (int i = 0; i < n; ++i) w_[i] = 0.5 * (w_[i] + w1[i] + dt * k2[i]);
  t_ += dt;
}

void BurgersFvOracle::advance_to(double t) {
  double max_w = 0.0;
  for (double w : w_) max_w = std::max(max_w, std::abs(w));
  const double dt_cfl = 0.4 * dx_ / std::max(max_w, 1e-12);
  while (t_ < t - 1e-14) step(std::min(dt_cfl, t - t_));
}

double BurgersFvOracle::sample(double x) const {
  const double s = (x + X_) / dx_ - 0.5;
  const int i =
      std::clamp(static_cast<int>(std::floor(s)), 0,
                 static_cast<int>(w_.size()) - 2);
  const double u = std::clamp(s - i, 0.0, 1.0);
  return (1.0 - u) * w_[i] + u * w_[i + 1];
}

CheckResult check_burgers() {
  CheckResult res;
  res.name = "Burgers characteristics vs finite-volume oracle";
  const BurgersProfile prof(-1.0, 1.0);

  // oracle equivalence on [0,20] x [-30,30]
  BurgersFvOracle oracle(-1.0, 1.0, 60.0, 24000);
  double sup_diff = 0.0;
  for (int kt = 0; kt <= 20; ++kt) {
    const double t = kt;
    oracle.advance_to(t);
    for (double x = -30.0; x <= 30.0; x += 0.25)
      sup_diff = std::max(sup_diff, std::abs(prof.eval(t, x) - oracle.sample(x)));
  }

  // strict bounds and positivity of w_x at random points; in the far
  // tails tanh saturates to +-1 in double precision, so the strict
  // inequalities are only checkable where |x - w t| < 18
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-50.0, 50.0), ut(0.0, 100.0);
  bool bounds_ok = true;
  int strict_points = 0;
  for (int k = 0; k < 10000; ++k) {
    const double t = ut(rng), x = ux(rng);
    const double w = prof.eval(t, x);
    if (!(w >= -1.0 && w <= 1.0) || !(prof.deriv_x(t, x) >= 0.0)) {
      bounds_ok = false;
      break;
    }
    if (std::abs(x - w * t) < 18.0) {
      ++strict_points;
      if (!(w > -1.0 && w < 1.0) || !(prof.deriv_x(t, x) > 0.0)) {
        bounds_ok = false;
        break;
      }
    }
  }
  bounds_ok = bounds_ok && strict_points >= 1000;

  // sup-norm derivative decay ~ (1+t)^{-1}
  std::vector<std::pair<double, double>> series;
  for (double t : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
    double sup = 0.0;
    const double lo = -1.0 * t - 5.0, hi = 1.0 * t + 5.0;
    for (int i = 0; i <= 4000; ++i)
      sup = std::max(sup, prof.deriv_x(t, lo + (hi - lo) * i / 4000.0));
    series.emplace_back(t, sup);
  }
  const FitResult fit = fit_decay(series);

  res.details["sup_diff_vs_oracle"] = sup_diff;
  res.details["bounds_ok"] = bounds_ok;
  res.details["strict_bound_points"] = strict_points;
  res.details["deriv_decay_slope"] = fit.slope;
  res.passed = sup_diff <= 1e-3 && bounds_ok && fit.slope >= -1.15 &&
               fit.slope <= -0.85;
  return res;
}

// ----------------------------------------------------------- selfsimilar

CheckResult check_selfsimilar() {
  CheckResult res;
  res.name = "self-similar diffusion profile";
  const GasParams g = default_gas();
  const auto prof = solve_selfsimilar(g, 1.0, 1.1, 1.0);

  bool monotone = true;
  const auto& th = prof.values();
  for (std::size_t i = 1; i < th.size(); ++i)
    monotone = monotone && th[i] >= th[i - 1];

  // Time-dependent PDE residual at the similarity nodes, with an
  // independent central-difference stencil.
  const auto& xi = prof.xi_grid();
  const double h = xi[1] - xi[0];
  const double ak = prof.a_kappa();
  const int n = static_cast<int>(xi.size());
  std::vector<double> dth(n, 0.0), q(n, 0.0);
  for (int i = 1; i < n - 1; ++i)
    dth[i] = (th[i + 1] - th[i - 1]) / (2.0 * h);
  for (int i = 1; i < n - 1; ++i) q[i] = dth[i] / th[i];
  double pde_resid = 0.0;
  for (double t : {0.0, 1.0, 10.0}) {
    for (int i = 2; i < n - 2; ++i) {
      const double qp = (q[i + 1] - q[i - 1]) / (2.0 * h);
      const double r = (-0.5 * xi[i] * dth[i] - ak * qp) / (1.0 + t);
      pde_resid = std::max(pde_resid, std::abs(r));
    }
  }

  const auto [C, c0] = fit_gaussian_tail(prof);

  res.details["bvp_residual"] = prof.bvp_residual();
  res.details["monotone"] = monotone;
  res.details["pde_residual"] = pde_resid;
  res.details["tail_c0"] = c0;
  res.details["tail_C"] = C;
  res.passed = prof.bvp_residual() <= 1e-8 && monotone && pde_resid <= 1e-6 &&
               c0 > 0.0;
  return res;
}

// --------------------------------------------------------------- riemann

CheckResult check_riemann_roundtrip() {
  CheckResult res;
  res.name = "Riemann pattern round-trip";
  const GasParams g = default_gas();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uv(0.8, 1.2), uu(-0.2, 0.2),
      us(0.0, 0.2), ur(0.92, 1.08);

  double worst_state = 0.0, worst_match = 0.0, worst_ratio = 0.0;
  int done = 0;
  while (done < 50) {
    const ThermoState left{uv(rng), uu(rng), uv(rng), 0.0};
    const WavePattern truth =
        forward_construct(g, left, us(rng), ur(rng), us(rng));
    if (truth.delta > 0.2) continue;  // keep within the strength cap
    ++done;
    const WavePattern sol = solve_pattern(g, truth.end, 1e-13);
    worst_state = std::max(
        {worst_state, std::abs(sol.mid_left.v - truth.mid_left.v),
         std::abs(sol.mid_left.u - truth.mid_left.u),
         std::abs(sol.mid_left.theta - truth.mid_left.theta),
         std::abs(sol.mid_right.v - truth.mid_right.v),
         std::abs(sol.mid_right.u - truth.mid_right.u),
         std::abs(sol.mid_right.theta - truth.mid_right.theta)});
    const double pl = pressure(g, sol.mid_left.v, sol.mid_left.theta);
    const double pr = pressure(g, sol.mid_right.v, sol.mid_right.theta);
    worst_match = std::max({worst_match, std::abs(pl - pr),
                            std::abs(sol.mid_left.u - sol.mid_right.u)});
    worst_ratio = std::max(worst_ratio, sol.strength_ratio);
  }
  res.details["worst_mid_state_error"] = worst_state;
  res.details["worst_contact_match"] = worst_match;
  res.details["worst_strength_ratio"] = worst_ratio;
  res.passed = worst_state <= 1e-8 && worst_match <= 1e-10;
  return res;
}

// --------------------------------------------------- composite residuals

CheckResult check_composite_residual_decay() {
  CheckResult res;
  res.name = "composite residual decay";
  const GasParams g = default_gas();
  // delta = 0.1 exactly, as for the default pattern, but with stronger
  // rarefactions so the self-similar decay regime is reached inside the
  // t in [1, 100] fit window (weak fans are still in their formation
  // transient until t ~ 1/max w0', which shallows every fitted slope)
  const WavePattern pat =
      forward_construct(g, ThermoState{1.0, 0.0, 1.0, 0.0}, 0.9, 1.1, 0.9);
  const CompositeWave w = build_composite(g, pat);

  const int nx = 16385;
  std::vector<double> x(nx);
  for (int i = 0; i < nx; ++i) x[i] = -250.0 + 500.0 * i / (nx - 1);
  const double dx = x[1] - x[0];

  std::vector<std::pair<double, double>> r1_sup, r1_l1, r1_l2, r2_l1;
  for (double t : {1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 70.0, 100.0}) {
    const ResidualFields f = residual_fields(g, w, t, x);
    r1_sup.emplace_back(t, norm_sup(f.R1));
    r1_l1.emplace_back(t, norm_l1(f.R1, dx));
    r1_l2.emplace_back(t, norm_l2(f.R1, dx));
    r2_l1.emplace_back(t, norm_l1(f.R2, dx));
  }
  const double s1_sup = fit_decay(r1_sup).slope;
  const double s1_l1 = fit_decay(r1_l1).slope;
  const double s1_l2 = fit_decay(r1_l2).slope;
  const double s2_l1 = fit_decay(r2_l1).slope;

  res.details["R1_sup_slope"] = s1_sup;
  res.details["R1_L1_slope"] = s1_l1;
  res.details["R1_L2_slope"] = s1_l2;
  res.details["R2_L1_slope"] = s2_l1;
  res.passed = s1_sup >= -1.65 && s1_sup <= -1.35 && s1_l1 >= -1.15 &&
               s1_l1 <= -0.85 && s1_l2 >= -1.4 && s1_l2 <= -1.1 &&
               s2_l1 <= -0.75;
  return res;
}

// ---------------------------------------------------------- manufactured

ThermoState ManufacturedSolution::state(double t, double x) const {
  const double s = std::sin(k * x), c = std::cos(k * x);
  const double st = std::sin(freq * t), ct = std::cos(freq * t);
  return {v0 + amp * s * ct, amp * c * st, th0 + 0.5 * amp * c * ct,
          amp * s * st};
}

std::array<double, 4> ManufacturedSolution::forcing(double t, double x) const {
  const GasParams& g = gas;
  const double s = std::sin(k * x), c = std::cos(k * x);
  const double st = std::sin(freq * t), ct = std::cos(freq * t);

  const double v = v0 + amp * s * ct;
  const double vt = -amp * freq * s * st;
  const double vx = amp * k * c * ct;

  const double u = amp * c * st;
  const double ut = amp * freq * c * ct;
  const double ux = -amp * k * s * st;

  const double th = th0 + 0.5 * amp * c * ct;
  const double tht = -0.5 * amp * freq * c * st;
  const double thx = -0.5 * amp * k * s * ct;
  const double thxx = -0.5 * amp * k * k * c * ct;

  const double w = amp * s * st;
  const double wt = amp * freq * s * ct;
  const double wx = amp * k * c * st;
  const double wxx = -amp * k * k * s * st;

  const double p = g.R * th / v;
  const double px = g.R * (thx * v - th * vx) / (v * v);
  const double heat = g.kappa * (thxx / v - thx * vx / (v * v));
  const double micro = wx * wx / v + v * w * w;
  const double cth = (g.gamma - 1.0) / g.R;
  const double omega_diff = wxx / v - wx * vx / (v * v);
  (void)u;

  return {vt - ux, ut + px, tht - cth * (-p * ux + heat + micro),
          wt - g.A * (omega_diff - v * w)};
}

BoundaryFn ManufacturedSolution::boundary() const {
  const ManufacturedSolution ms = *this;
  return [ms](double t, double x) { return ms.state(t, x); };
}

ForcingFn ManufacturedSolution::forcing_fn() const {
  const ManufacturedSolution ms = *this;
  return [ms](double t, double x) { return ms.forcing(t, x); };
}

// ---------------------------------------------------------------- solver

namespace {

double manufactured_error(const ManufacturedSolution& ms, int n) {
  Grid grid{1.0, n};
  SimState s;
  s.t = 0.0;
  s.grid = grid;
  s.params = ms.gas;
  s.v.resize(n);
  s.u.resize(n);
  s.theta.resize(n);
  s.omega.resize(n);
  for (int i = 0; i < n; ++i) {
    const ThermoState st = ms.state(0.0, grid.x(i));
    s.v[i] = st.v;
    s.u[i] = st.u;
    s.theta[i] = st.theta;
    s.omega[i] = st.omega;
  }
  const BoundaryFn bc = ms.boundary();
  RhsOptions opt;
  opt.forcing = ms.forcing_fn();
  const double T = 0.02;
  while (s.t < T - 1e-14) {
    const double dt = std::min(stable_dt(s, 0.3), T - s.t);
    s = step(s, dt, bc, opt);
  }
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    const ThermoState ex = ms.state(s.t, grid.x(i));
    err = std::max({err, std::abs(s.v[i] - ex.v), std::abs(s.u[i] - ex.u),
                    std::abs(s.theta[i] - ex.theta),
                    std::abs(s.omega[i] - ex.omega)});
  }
  return err;
}

}  // namespace

CheckResult check_solver_correctness() {
  CheckResult res;
  res.name = "solver correctness";
  const GasParams g = default_gas();

  // (a) manufactured-solution spatial convergence
  ManufacturedSolution ms;
  ms.gas = g;
  const double e512 = manufactured_error(ms, 512);
  const double e1024 = manufactured_error(ms, 1024);
  const double e2048 = manufactured_error(ms, 2048);
  const double order1 = std::log2(e512 / e1024);
  const double order2 = std::log2(e1024 / e2048);
  const double order = std::min(order1, order2);

  // (b) conservation defect on a nontrivial state
  const CompositeWave w = build_composite(g, default_pattern(g));
  Grid grid{50.0, 512};
  SimState s = SimState::from_profile(g, grid, w.field, 0.0);
  PerturbationSpec pert;
  pert.amplitude = 1e-2;
  apply_perturbation(s, pert);
  const BoundaryFn bc = boundary_from_profile(w.field);
  const RhsResult rhs = spatial_rhs(s, bc);
  const double defect = conservation_defect(s, rhs);

  // (c) omega-energy dissipation identity (flow frozen)
  Grid og{10.0, 256};
  SimState os_;
  os_.t = 0.0;
  os_.grid = og;
  os_.params = g;
  os_.v.resize(og.n);
  os_.u.assign(og.n, 0.0);
  os_.theta.assign(og.n, 1.0);
  os_.omega.resize(og.n);
  for (int i = 0; i < og.n; ++i) {
    const double x = og.x(i);
    os_.v[i] = 1.0 + 0.2 * std::sin(0.3 * x);
    os_.omega[i] = std::exp(-x * x);
  }
  const BoundaryFn obc = [](double, double) {
    return ThermoState{1.0, 0.0, 1.0, 0.0};
  };
  RhsOptions frozen;
  frozen.freeze_flow = true;
  auto omega_energy = [&](const SimState& st) {
    double e = 0.0;
    for (int i = 0; i < st.grid.n; ++i)
      e += 0.5 * st.omega[i] * st.omega[i] * st.grid.dx();
    return e;
  };
  const double D0 = omega_dissipation_rate(os_, obc);
  auto identity_resid = [&](double dt) {
    const SimState s1 = step(os_, dt, obc, frozen);
    return std::abs(omega_energy(s1) - omega_energy(os_) + dt * D0);
  };
  const double dt0 = 1e-3;
  const double r1 = identity_resid(dt0);
  const double r2 = identity_resid(0.5 * dt0);
  const bool omega_ok = r1 <= 10.0 * dt0 * dt0 * std::abs(D0) &&
                        r2 <= 0.35 * r1 + 1e-14;

  // (d) constant-state preservation
  const ProfileField cst = constant_profile(ThermoState{1.0, 0.0, 1.0, 0.0});
  RunOptions ropt;
  ropt.t_final = 10.0;
  ropt.diag_dt = 5.0;
  const RunResult rr =
      run(g, Grid{20.0, 128}, cst, PerturbationSpec{}, ropt);

  res.details["convergence_orders"] = {order1, order2};
  res.details["conservation_defect"] = defect;
  res.details["omega_identity_residuals"] = {r1, r2};
  res.details["constant_state_sup"] = rr.final_sup;
  res.passed = order >= 1.9 && defect <= 1e-12 && omega_ok &&
               rr.final_sup <= 1e-10;
  return res;
}

// ----------------------------------------------------------- stability

CheckResult check_stability_experiment(const StabilityOptions& opt) {
  CheckResult res;
  res.name = "composite-wave stability experiment";
  const GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));

  PerturbationSpec pert;
  pert.amplitude = opt.epsilon;
  RunOptions ropt;
  ropt.t_final = opt.t_final;
  ropt.diag_dt = 1.0;

  std::vector<std::pair<double, double>> omega_l2;
  const Grid grid{opt.L, opt.n};
  const RunResult rr = run(g, grid, w.field, pert, ropt,
                           [&](const SimState& s) {
                             omega_l2.emplace_back(
                                 s.t, norm_l2(s.omega, s.grid.dx()));
                           });

  bool omega_monotone = true;
  double prev = -1.0;
  for (const auto& [t, val] : omega_l2) {
    if (t < 1.0) continue;
    if (prev >= 0.0 && val > prev + 1e-10 * omega_l2.front().second)
      omega_monotone = false;
    prev = val;
  }

  res.details["initial_sup"] = rr.initial_sup;
  res.details["final_sup"] = rr.final_sup;
  res.details["sup_ratio"] = rr.final_sup / rr.initial_sup;
  res.details["omega_l2_monotone_after_transient"] = omega_monotone;
  res.details["min_v"] = rr.min_v;
  res.details["min_theta"] = rr.min_theta;
  res.passed = rr.final_sup < 0.5 * rr.initial_sup && omega_monotone;
  return res;
}

// --------------------------------------------------------- localization

CheckResult check_localization() {
  CheckResult res;
  res.name = "wave localization across regions";
  const GasParams g = default_gas();
  const WavePattern pat = default_pattern(g);
  const CompositeWave w = build_composite(g, pat);

  const double lam_m =
      char_speed(g, pat.mid_left.v, pat.mid_left.theta, Family::minus);
  const double lam_p =
      char_speed(g, pat.mid_right.v, pat.mid_right.theta, Family::plus);

  std::vector<std::pair<double, double>> rar_in_c, contact_out;
  for (int kt = 1; kt <= 20; ++kt) {
    const double t = kt;
    const double xl = 0.5 * lam_m * t, xr = 0.5 * lam_p * t;
    double sup_rar = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = xl + (xr - xl) * i / 400.0;
      sup_rar = std::max({sup_rar, std::abs(w.rar_minus(t, x).Vx),
                          std::abs(w.rar_plus(t, x).Vx)});
    }
    double sup_con = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double off = 30.0 * i / 400.0;
      sup_con = std::max({sup_con, std::abs(w.contact(t, xr + off).Thx),
                          std::abs(w.contact(t, xl - off).Thx)});
    }
    rar_in_c.emplace_back(t, sup_rar);
    contact_out.emplace_back(t, sup_con);
  }
  const double rate_rar = fit_exponential(rar_in_c).slope;
  const double rate_con = fit_exponential(contact_out).slope;

  res.details["rarefaction_in_Omega_c_rate"] = rate_rar;
  res.details["contact_in_Omega_pm_rate"] = rate_con;
  res.passed = rate_rar < 0.0 && rate_con < 0.0;
  return res;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_heat_kernel());
  out.push_back(check_burgers());
  out.push_back(check_selfsimilar());
  out.push_back(check_riemann_roundtrip());
  out.push_back(check_composite_residual_decay());
  out.push_back(check_solver_correctness());
  out.push_back(check_localization());
  if (opt.include_stability)
    out.push_back(check_stability_experiment(opt.stability));
  return out;
}

}  // namespace mpwave
