#include "mpwave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mpwave {

PerturbationFields perturbation(const SimState& s,
                                const ProfileField& composite) {
  const int n = s.grid.n;
  PerturbationFields f;
  f.phi.resize(n);
  f.psi.resize(n);
  f.zeta.resize(n);
  f.omega = s.omega;
  for (int i = 0; i < n; ++i) {
    const ProfilePoint p = composite(s.t, s.grid.x(i));
    f.phi[i] = s.v[i] - p.V;
    f.psi[i] = s.u[i] - p.U;
    f.zeta[i] = s.theta[i] - p.Th;
  }
  return f;
}

double norm_sup(const std::vector<double>& f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

double norm_l1(const std::vector<double>& f, double dx) {
  if (f.empty()) return 0.0;
  double s = 0.5 * (std::abs(f.front()) + std::abs(f.back()));
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += std::abs(f[i]);
  return s * dx;
}

double norm_l2(const std::vector<double>& f, double dx) {
  if (f.empty()) return 0.0;
  double s = 0.5 * (f.front() * f.front() + f.back() * f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i] * f[i];
  return std::sqrt(s * dx);
}

std::vector<double> central_deriv(const std::vector<double>& f, double dx) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  d[0] = (f[1] - f[0]) / dx;
  d[n - 1] = (f[n - 1] - f[n - 2]) / dx;
  return d;
}

double norm_h1(const std::vector<double>& f, double dx) {
  const double a = norm_l2(f, dx);
  const double b = norm_l2(central_deriv(f, dx), dx);
  return std::sqrt(a * a + b * b);
}

double norm_h2(const std::vector<double>& f, double dx) {
  const auto d1 = central_deriv(f, dx);
  const double a = norm_h1(f, dx);
  const double b = norm_l2(central_deriv(d1, dx), dx);
  return std::sqrt(a * a + b * b);
}

double entropy_Phi(double s) {
  require_positive(s, "Phi argument");
  return s - 1.0 - std::log(s);
}

double entropy_energy(const SimState& s, const ProfileField& composite) {
  const int n = s.grid.n;
  const double dx = s.grid.dx();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const ProfilePoint p = composite(s.t, s.grid.x(i));
    const double psi = s.u[i] - p.U;
    const double term = p.Th * entropy_Phi(s.v[i] / p.V) + 0.5 * psi * psi +
                        p.Th * entropy_Phi(s.theta[i] / p.Th) +
                        0.5 * s.omega[i] * s.omega[i];
    acc += (i == 0 || i == n - 1 ? 0.5 : 1.0) * term;
  }
  return acc * dx;
}

double KernelWeight::h(double t, double x) const {
  return std::exp(-alpha * x * x / (1.0 + t)) / std::sqrt(1.0 + t);
}

double KernelWeight::g(double t, double x) const {
  // int exp(-alpha y^2/(1+t)) dy = sqrt(pi (1+t)/alpha)/2 (1+erf(..))
  const double z = x * std::sqrt(alpha / (1.0 + t));
  return 0.5 * std::sqrt(M_PI / alpha) * (1.0 + std::erf(z));
}

double KernelWeight::sup_g() const { return std::sqrt(M_PI / alpha); }

KernelCheckReport kernel_check(const KernelWeight& w,
                               const std::vector<double>& t_samples,
                               int n_random, unsigned seed) {
  KernelCheckReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-20.0, 20.0);
  std::uniform_real_distribution<double> ut(0.0, 50.0);

  for (double t : t_samples) {
    // numeric sup over a wide grid
    double sup = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      const double x = -200.0 + 0.1 * i;
      sup = std::max(sup, w.g(t, x));
    }
    rep.sup_g_error =
        std::max(rep.sup_g_error, std::abs(sup - w.sup_g()) / w.sup_g());
  }
  for (int k = 0; k < n_random; ++k) {
    const double t = ut(rng), x = ux(rng);
    const double ht = 1e-5 * (1.0 + t);
    const double gt = (w.g(t + ht, x) - w.g(t - ht, x)) / (2.0 * ht);
    const double hx = -2.0 * w.alpha * x / (1.0 + t) * w.h(t, x);
    rep.identity_residual =
        std::max(rep.identity_residual, std::abs(4.0 * w.alpha * gt - hx));
  }
  return rep;
}

double weighted_square_integral(const KernelWeight& w, double t,
                                const std::vector<double>& x,
                                const std::vector<double>& F) {
  if (x.size() != F.size() || x.size() < 2)
    throw std::invalid_argument("weighted_square_integral: bad sizes");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double ha = w.h(t, x[i]), hb = w.h(t, x[i + 1]);
    const double fa = F[i] * F[i] * ha * ha, fb = F[i + 1] * F[i + 1] * hb * hb;
    acc += 0.5 * (fa + fb) * (x[i + 1] - x[i]);
  }
  return acc;
}

ResidualFields residual_fields(const GasParams& g, const CompositeWave& w,
                               double t, const std::vector<double>& x) {
  ResidualFields out;
  out.x = x;
  const std::size_t n = x.size();
  out.R1.resize(n);
  out.R2.resize(n);
  out.R1_1.resize(n);
  out.Uc_t.resize(n);
  const double cR = g.R / (g.gamma - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const ProfilePoint c = w.field(t, x[i]);
    const ProfilePoint rm = w.rar_minus(t, x[i]);
    const ProfilePoint rp = w.rar_plus(t, x[i]);
    const ProfilePoint cc = w.contact(t, x[i]);

    auto p_x = [&](const ProfilePoint& q) {
      return g.R * (q.Thx * q.V - q.Th * q.Vx) / (q.V * q.V);
    };
    const double Px = p_x(c);
    out.R1[i] = c.Ut + Px;
    out.R1_1[i] = Px - p_x(rm) - p_x(rp);
    out.Uc_t[i] = cc.Ut;

    const double P = g.R * c.Th / c.V;
    const double heat =
        g.kappa * (c.Thxx / c.V - c.Thx * c.Vx / (c.V * c.V));
    out.R2[i] = heat - cR * c.Tht - P * c.Ux;
  }
  return out;
}

NormReport make_norm_report(const SimState& s, const ProfileField& composite,
                            const KernelWeight& w) {
  NormReport r;
  r.t = s.t;
  const double dx = s.grid.dx();
  const PerturbationFields f = perturbation(s, composite);
  r.sup_phi = norm_sup(f.phi);
  r.sup_psi = norm_sup(f.psi);
  r.sup_zeta = norm_sup(f.zeta);
  r.sup_omega = norm_sup(f.omega);
  r.l2_phi = norm_l2(f.phi, dx);
  r.l2_psi = norm_l2(f.psi, dx);
  r.l2_zeta = norm_l2(f.zeta, dx);
  r.l2_omega = norm_l2(f.omega, dx);
  r.h1_phi = norm_h1(f.phi, dx);
  r.h1_psi = norm_h1(f.psi, dx);
  r.h1_zeta = norm_h1(f.zeta, dx);
  r.h1_omega = norm_h1(f.omega, dx);
  r.h2_phi = norm_h2(f.phi, dx);
  r.h2_psi = norm_h2(f.psi, dx);
  r.h2_zeta = norm_h2(f.zeta, dx);
  r.h2_omega = norm_h2(f.omega, dx);

  std::vector<double> x(s.grid.n), F2(s.grid.n);
  for (int i = 0; i < s.grid.n; ++i) {
    x[i] = s.grid.x(i);
    F2[i] = std::sqrt(f.phi[i] * f.phi[i] + f.psi[i] * f.psi[i] +
                      f.zeta[i] * f.zeta[i]);
  }
  r.weighted_integral = weighted_square_integral(w, s.t, x, F2);
  r.entropy = entropy_energy(s, composite);

  const BoundaryFn bc = boundary_from_profile(composite);
  r.omega_dissipation = omega_dissipation_rate(s, bc);
  r.conservation_defect = conservation_defect(s, spatial_rhs(s, bc));
  return r;
}

namespace {

FitResult fit_line(const std::vector<std::pair<double, double>>& xy) {
  const int n = static_cast<int>(xy.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [X, Y] : xy) {
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    syy += Y * Y;
  }
  FitResult r;
  const double den = n * sxx - sx * sx;
  r.slope = (n * sxy - sx * sy) / den;
  r.intercept = (sy - r.slope * sx) / n;
  const double sst = syy - sy * sy / n;
  double sse = 0.0;
  for (const auto& [X, Y] : xy) {
    const double e = Y - (r.intercept + r.slope * X);
    sse += e * e;
  }
  r.r2 = sst > 0.0 ? 1.0 - sse / sst : 1.0;
  return r;
}

}  // namespace

FitResult fit_decay(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 4)
    throw std::invalid_argument("fit_decay: need >= 4 samples");
  std::vector<std::pair<double, double>> xy;
  xy.reserve(series.size());
  for (const auto& [t, v] : series) {
    if (!(v > 0.0))
      throw std::invalid_argument("fit_decay: values must be positive");
    xy.emplace_back(std::log(1.0 + t), std::log(v));
  }
  return fit_line(xy);
}

FitResult fit_exponential(
    const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 3)
    throw std::invalid_argument("fit_exponential: need >= 3 samples");
  std::vector<std::pair<double, double>> xy;
  xy.reserve(series.size());
  for (const auto& [t, v] : series) {
    if (!(v > 0.0))
      throw std::invalid_argument("fit_exponential: values must be positive");
    xy.emplace_back(t, std::log(v));
  }
  return fit_line(xy);
}

RegionNorms region_norms(const std::vector<double>& x,
                         const std::vector<double>& f, double t,
                         const WavePattern& pat, const GasParams& g) {
  if (x.size() != f.size())
    throw std::invalid_argument("region_norms: size mismatch");
  RegionNorms r;
  double s2m = 0, s2c = 0, s2p = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = i + 1 < x.size() ? x[i + 1] - x[i]
                                       : (i > 0 ? x[i] - x[i - 1] : 0.0);
    switch (classify_domain(t, x[i], pat, g)) {
      case Region::Omega_minus:
        r.sup_minus = std::max(r.sup_minus, std::abs(f[i]));
        s2m += f[i] * f[i] * dx;
        break;
      case Region::Omega_c:
        r.sup_c = std::max(r.sup_c, std::abs(f[i]));
        s2c += f[i] * f[i] * dx;
        break;
      case Region::Omega_plus:
        r.sup_plus = std::max(r.sup_plus, std::abs(f[i]));
        s2p += f[i] * f[i] * dx;
        break;
    }
  }
  r.l2_minus = std::sqrt(s2m);
  r.l2_c = std::sqrt(s2c);
  r.l2_plus = std::sqrt(s2p);
  return r;
}

}  // namespace mpwave
