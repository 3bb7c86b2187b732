#include "mpwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mpwave {

SimState SimState::from_profile(const GasParams& g, const Grid& grid,
                                const ProfileField& prof, double t0) {
  grid.validate();
  SimState s;
  s.t = t0;
  s.grid = grid;
  s.params = g;
  s.v.resize(grid.n);
  s.u.resize(grid.n);
  s.theta.resize(grid.n);
  s.omega.assign(grid.n, 0.0);
  for (int i = 0; i < grid.n; ++i) {
    const ProfilePoint p = prof(t0, grid.x(i));
    s.v[i] = p.V;
    s.u[i] = p.U;
    s.theta[i] = p.Th;
  }
  return s;
}

void SimState::check_positive() const {
  for (int i = 0; i < grid.n; ++i) {
    const bool bad = !(v[i] > 0.0) || !(theta[i] > 0.0) ||
                     !std::isfinite(v[i]) || !std::isfinite(u[i]) ||
                     !std::isfinite(theta[i]) || !std::isfinite(omega[i]);
    if (bad) {
      std::ostringstream os;
      os << "positivity/finiteness violated at t=" << t << ", x=" << grid.x(i)
         << " (v=" << v[i] << ", theta=" << theta[i] << ")";
      throw PositivityError(os.str(), *this);
    }
  }
}

BoundaryFn boundary_from_profile(const ProfileField& prof) {
  return [prof](double t, double x) {
    const ProfilePoint p = prof(t, x);
    return ThermoState{p.V, p.U, p.Th, 0.0};
  };
}

namespace {
constexpr int NG = 2;  // ghost cells per side (MUSCL stencil)
}

RhsResult spatial_rhs(const SimState& s, const BoundaryFn& bc,
                      const RhsOptions& opt) {
  s.check_positive();
  const int n = s.grid.n;
  const double dx = s.grid.dx();
  const GasParams& g = s.params;

  // Extended arrays with ghost cells filled from the boundary field.
  const int ne = n + 2 * NG;
  std::vector<double> v(ne), u(ne), th(ne), om(ne);
  for (int i = 0; i < n; ++i) {
    v[i + NG] = s.v[i];
    u[i + NG] = s.u[i];
    th[i + NG] = s.theta[i];
    om[i + NG] = s.omega[i];
  }
  for (int k = 0; k < NG; ++k) {
    const ThermoState bl = bc(s.t, s.grid.x(-1 - k));
    const ThermoState br = bc(s.t, s.grid.x(n + k));
    v[NG - 1 - k] = bl.v;
    u[NG - 1 - k] = bl.u;
    th[NG - 1 - k] = bl.theta;
    om[NG - 1 - k] = bl.omega;
    v[NG + n + k] = br.v;
    u[NG + n + k] = br.u;
    th[NG + n + k] = br.theta;
    om[NG + n + k] = br.omega;
  }

  RhsResult r;
  r.dv.assign(n, 0.0);
  r.du.assign(n, 0.0);
  r.dtheta.assign(n, 0.0);
  r.domega.assign(n, 0.0);

  // --- inviscid (v,u) subsystem: Rusanov flux on MUSCL-reconstructed
  // face states (unlimited central slopes; the target solutions are
  // smooth and second order is required).
  const int nf = n + 1;  // faces between cells NG-1..NG+n-1
  std::vector<double> Gv(nf), Gu(nf), Dv(nf), Du(nf);
  for (int f = 0; f < nf; ++f) {
    const int iL = f + NG - 1;  // cell left of face
    const int iR = iL + 1;
    const double vL = v[iL] + 0.25 * (v[iL + 1] - v[iL - 1]);
    const double vR = v[iR] - 0.25 * (v[iR + 1] - v[iR - 1]);
    const double uL = u[iL] + 0.25 * (u[iL + 1] - u[iL - 1]);
    const double uR = u[iR] - 0.25 * (u[iR + 1] - u[iR - 1]);
    const double tL = th[iL] + 0.25 * (th[iL + 1] - th[iL - 1]);
    const double tR = th[iR] - 0.25 * (th[iR + 1] - th[iR - 1]);
    const double pL = g.R * tL / vL;
    const double pR = g.R * tR / vR;
    const double sL = std::sqrt(g.gamma * g.R * th[iL] / (v[iL] * v[iL]));
    const double sR = std::sqrt(g.gamma * g.R * th[iR] / (v[iR] * v[iR]));
    const double a = std::max(sL, sR);
    Dv[f] = -0.5 * a * (vR - vL);
    Du[f] = -0.5 * a * (uR - uL);
    Gv[f] = -0.5 * (uL + uR) + Dv[f];
    Gu[f] = 0.5 * (pL + pR) + Du[f];
  }
  r.flux_v_left = Gv[0];
  r.flux_v_right = Gv[n];
  r.flux_u_left = Gu[0];
  r.flux_u_right = Gu[n];

  const double cth = (g.gamma - 1.0) / g.R;  // 1 / (R/(gamma-1))
  for (int i = 0; i < n; ++i) {
    double GvR = Gv[i + 1], GuR = Gu[i + 1];
    if (opt.break_conservation) {
      GvR -= 2.0 * Dv[i + 1];
      GuR -= 2.0 * Du[i + 1];
    }
    const double dv = -(GvR - Gv[i]) / dx;
    const double du = -(GuR - Gu[i]) / dx;

    const int j = i + NG;
    // diffusion fluxes with arithmetic averaging of 1/v at faces
    const double ivp = 0.5 * (1.0 / v[j] + 1.0 / v[j + 1]);
    const double ivm = 0.5 * (1.0 / v[j - 1] + 1.0 / v[j]);
    const double heat =
        g.kappa * ((th[j + 1] - th[j]) * ivp - (th[j] - th[j - 1]) * ivm) /
        (dx * dx);
    const double omx = (om[j + 1] - om[j - 1]) / (2.0 * dx);
    const double micro = omx * omx / v[j] + v[j] * om[j] * om[j];
    const double p_i = g.R * th[j] / v[j];
    // discrete u_x := dv (compatibility with the mass equation)
    const double dth = cth * (-p_i * dv + heat + micro);

    const double dom =
        g.A * (((om[j + 1] - om[j]) * ivp - (om[j] - om[j - 1]) * ivm) /
                   (dx * dx) -
               v[j] * om[j]);

    if (opt.freeze_flow) {
      r.domega[i] = dom;
    } else {
      r.dv[i] = dv;
      r.du[i] = du;
      r.dtheta[i] = dth;
      r.domega[i] = dom;
    }
  }

  if (opt.forcing) {
    for (int i = 0; i < n; ++i) {
      const auto f = opt.forcing(s.t, s.grid.x(i));
      r.dv[i] += f[0];
      r.du[i] += f[1];
      r.dtheta[i] += f[2];
      r.domega[i] += f[3];
    }
  }
  return r;
}

double conservation_defect(const SimState& s, const RhsResult& r) {
  const double dx = s.grid.dx();
  long double sv = 0.0L, su = 0.0L;
  for (int i = 0; i < s.grid.n; ++i) {
    sv += r.dv[i];
    su += r.du[i];
  }
  sv *= dx;
  su *= dx;
  const double dv_defect =
      std::abs(static_cast<double>(sv) + (r.flux_v_right - r.flux_v_left));
  const double du_defect =
      std::abs(static_cast<double>(su) + (r.flux_u_right - r.flux_u_left));
  return dv_defect + du_defect;
}

double omega_dissipation_rate(const SimState& s, const BoundaryFn& bc) {
  const int n = s.grid.n;
  const double dx = s.grid.dx();
  const double oml = bc(s.t, s.grid.x(-1)).omega;
  const double omr = bc(s.t, s.grid.x(n)).omega;
  const double vl = bc(s.t, s.grid.x(-1)).v;
  const double vr = bc(s.t, s.grid.x(n)).v;
  double grad = 0.0, relax = 0.0;
  for (int f = 0; f <= n; ++f) {
    const double om_l = f == 0 ? oml : s.omega[f - 1];
    const double om_r = f == n ? omr : s.omega[f];
    const double v_l = f == 0 ? vl : s.v[f - 1];
    const double v_r = f == n ? vr : s.v[f];
    const double iv = 0.5 * (1.0 / v_l + 1.0 / v_r);
    const double d = (om_r - om_l) / dx;
    grad += d * d * iv * dx;
  }
  for (int i = 0; i < n; ++i) relax += s.v[i] * s.omega[i] * s.omega[i] * dx;
  return s.params.A * (grad + relax);
}

double stable_dt(const SimState& s, double safety) {
  const GasParams& g = s.params;
  double max_speed = 0.0, min_v = s.v[0];
  for (int i = 0; i < s.grid.n; ++i) {
    const double c = std::sqrt(g.gamma * g.R * s.theta[i] / (s.v[i] * s.v[i]));
    max_speed = std::max(max_speed, std::abs(s.u[i]) + c);
    min_v = std::min(min_v, s.v[i]);
  }
  const double dx = s.grid.dx();
  const double dt_hyp = dx / max_speed;
  const double diff = std::max(g.kappa * (g.gamma - 1.0) / g.R, g.A);
  const double dt_par = dx * dx * min_v / (2.0 * diff);
  return safety * std::min(dt_hyp, dt_par);
}

namespace {

SimState euler_update(const SimState& s, const RhsResult& r, double dt) {
  SimState out = s;
  out.t = s.t + dt;
  for (int i = 0; i < s.grid.n; ++i) {
    out.v[i] = s.v[i] + dt * r.dv[i];
    out.u[i] = s.u[i] + dt * r.du[i];
    out.theta[i] = s.theta[i] + dt * r.dtheta[i];
    out.omega[i] = s.omega[i] + dt * r.domega[i];
  }
  return out;
}

SimState blend(const SimState& a, double wa, const SimState& b, double wb,
               double t) {
  SimState out = a;
  out.t = t;
  for (int i = 0; i < a.grid.n; ++i) {
    out.v[i] = wa * a.v[i] + wb * b.v[i];
    out.u[i] = wa * a.u[i] + wb * b.u[i];
    out.theta[i] = wa * a.theta[i] + wb * b.theta[i];
    out.omega[i] = wa * a.omega[i] + wb * b.omega[i];
  }
  return out;
}

}  // namespace

SimState step(const SimState& s, double dt, const BoundaryFn& bc,
              const RhsOptions& opt) {
  // Shu-Osher SSP-RK3.
  SimState s1 = euler_update(s, spatial_rhs(s, bc, opt), dt);
  s1.check_positive();
  SimState s2 = blend(s, 0.75, euler_update(s1, spatial_rhs(s1, bc, opt), dt),
                      0.25, s.t + 0.5 * dt);
  s2.check_positive();
  SimState out =
      blend(s, 1.0 / 3.0,
            euler_update(s2, spatial_rhs(s2, bc, opt), dt), 2.0 / 3.0,
            s.t + dt);
  out.check_positive();
  return out;
}

void apply_perturbation(SimState& s, const PerturbationSpec& p) {
  if (p.amplitude == 0.0) return;
  const double iw2 = 1.0 / (p.width * p.width);
  for (int i = 0; i < s.grid.n; ++i) {
    const double x = s.grid.x(i);
    const double bump = p.amplitude * std::exp(-x * x * iw2);
    if (p.in_v) s.v[i] += bump;
    if (p.in_u) s.u[i] += bump;
    if (p.in_theta) s.theta[i] += bump;
    if (p.in_omega) s.omega[i] += bump;
  }
}

RunResult run(const GasParams& g, const Grid& grid,
              const ProfileField& composite, const PerturbationSpec& pert,
              const RunOptions& opt, const DiagCallback& diag_cb,
              const DiagCallback& snap_cb) {
  SimState s = SimState::from_profile(g, grid, composite, 0.0);
  apply_perturbation(s, pert);
  s.check_positive();
  const BoundaryFn bc = boundary_from_profile(composite);

  auto sup_perturbation = [&](const SimState& st) {
    double sup = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      const ProfilePoint p = composite(st.t, grid.x(i));
      sup = std::max({sup, std::abs(st.v[i] - p.V), std::abs(st.u[i] - p.U),
                      std::abs(st.theta[i] - p.Th), std::abs(st.omega[i])});
    }
    return sup;
  };

  RunResult res;
  res.initial_sup = sup_perturbation(s);
  res.min_v = res.max_v = s.v[0];
  res.min_theta = res.max_theta = s.theta[0];

  double next_diag = 0.0;
  double next_snap = opt.snapshot_dt > 0.0 ? 0.0 : -1.0;
  const double eps_t = 1e-12;
  while (true) {
    if (next_diag >= 0.0 && s.t + eps_t >= next_diag) {
      if (diag_cb) diag_cb(s);
      res.diag_times.push_back(s.t);
      next_diag += opt.diag_dt;
    }
    if (next_snap >= 0.0 && s.t + eps_t >= next_snap) {
      if (snap_cb) snap_cb(s);
      next_snap += opt.snapshot_dt;
    }
    for (int i = 0; i < grid.n; ++i) {
      res.min_v = std::min(res.min_v, s.v[i]);
      res.max_v = std::max(res.max_v, s.v[i]);
      res.min_theta = std::min(res.min_theta, s.theta[i]);
      res.max_theta = std::max(res.max_theta, s.theta[i]);
    }
    if (s.t + eps_t >= opt.t_final) break;

    double dt = stable_dt(s, opt.safety);
    dt = std::min(dt, opt.t_final - s.t);
    if (next_diag >= 0.0) dt = std::min(dt, next_diag - s.t);
    if (next_snap >= 0.0 && next_snap > s.t) dt = std::min(dt, next_snap - s.t);
    s = step(s, dt, bc);
  }
  if (diag_cb && (res.diag_times.empty() || res.diag_times.back() < s.t))
    diag_cb(s);
  res.t_end = s.t;
  res.final_sup = sup_perturbation(s);
  return res;
}

}  // namespace mpwave
