#include "mpwave/selfsimilar.hpp"

#include "mpwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mpwave {

namespace {

// Tridiagonal solve (Thomas algorithm); overwrites inputs.
void thomas(std::vector<double>& a, std::vector<double>& b,
            std::vector<double>& c, std::vector<double>& d) {
  const int n = static_cast<int>(b.size());
  for (int i = 1; i < n; ++i) {
    const double m = a[i] / b[i - 1];
    b[i] -= m * c[i - 1];
    d[i] -= m * d[i - 1];
  }
  d[n - 1] /= b[n - 1];
  for (int i = n - 2; i >= 0; --i) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
}

}  // namespace

double default_xi(const GasParams& g, double p_plus) {
  const double a = p_plus * (g.gamma - 1.0) / (g.gamma * g.R * g.R);
  return 12.0 * std::sqrt(2.0 * a * g.kappa);
}

SelfSimilarProfile solve_selfsimilar(const GasParams& g, double theta_minus,
                                     double theta_plus, double p_plus,
                                     double Xi, int n, double tol) {
  g.validate();
  require_positive(theta_minus, "theta_minus");
  require_positive(theta_plus, "theta_plus");
  require_positive(p_plus, "p_plus");
  if (n < 16) throw std::domain_error("solve_selfsimilar: n too small");
  if (!(tol > 0.0)) throw std::domain_error("solve_selfsimilar: tol <= 0");

  const double a = p_plus * (g.gamma - 1.0) / (g.gamma * g.R * g.R);
  const double ak = a * g.kappa;
  if (Xi <= 0.0) Xi = default_xi(g, p_plus);
  const double delta = std::abs(theta_plus - theta_minus);
  if (delta > 0.0 && std::exp(-Xi * Xi / (4.0 * ak)) * delta >= tol) {
    std::ostringstream os;
    os << "solve_selfsimilar: Xi=" << Xi
       << " too small for tail tolerance tol=" << tol;
    throw std::domain_error(os.str());
  }

  SelfSimilarProfile prof;
  prof.theta_m_ = theta_minus;
  prof.theta_p_ = theta_plus;
  prof.ak_ = ak;
  prof.xi_max_ = Xi;
  prof.dxi_ = 2.0 * Xi / (n - 1);

  auto& xi = prof.xi_;
  auto& th = prof.th_;
  xi.resize(n);
  th.resize(n);
  const double h = prof.dxi_;
  for (int i = 0; i < n; ++i) {
    xi[i] = -Xi + i * h;
    // erf initial guess (exact for the linearized equation)
    th[i] = theta_minus + (theta_plus - theta_minus) * 0.5 *
                              (1.0 + std::erf(xi[i] / std::sqrt(4.0 * ak)));
  }

  // Residual of the interior equations:
  //   F_i = ak (q_{i+1/2} - q_{i-1/2}) / h + (xi_i/2)(th_{i+1}-th_{i-1})/(2h)
  //   q_{i+1/2} = (th_{i+1}-th_i) / (h * (th_i+th_{i+1})/2)
  auto residual = [&](const std::vector<double>& v, std::vector<double>& F) {
    double sup = 0.0;
    for (int i = 1; i < n - 1; ++i) {
      const double qp = (v[i + 1] - v[i]) / (h * 0.5 * (v[i] + v[i + 1]));
      const double qm = (v[i] - v[i - 1]) / (h * 0.5 * (v[i - 1] + v[i]));
      F[i] = ak * (qp - qm) / h + 0.5 * xi[i] * (v[i + 1] - v[i - 1]) / (2.0 * h);
      sup = std::max(sup, std::abs(F[i]));
    }
    return sup;
  };

  std::vector<double> F(n, 0.0), lo(n, 0.0), di(n, 1.0), up(n, 0.0), rhs(n, 0.0);
  double sup = residual(th, F);
  int iter = 0;
  const int max_iter = 50;
  while (sup > tol && iter++ < max_iter) {
    // Analytic tridiagonal Jacobian of F w.r.t. th.
    for (int i = 1; i < n - 1; ++i) {
      const double sm = 0.5 * (th[i - 1] + th[i]);
      const double sp = 0.5 * (th[i] + th[i + 1]);
      const double dm = th[i] - th[i - 1];
      const double dp = th[i + 1] - th[i];
      // d q_{i+1/2} / d th_i, th_{i+1}
      const double dqp_di = (-1.0 / sp - 0.5 * dp / (sp * sp)) / h;
      const double dqp_dip = (1.0 / sp - 0.5 * dp / (sp * sp)) / h;
      const double dqm_dim = (-1.0 / sm - 0.5 * dm / (sm * sm)) / h;
      const double dqm_di = (1.0 / sm - 0.5 * dm / (sm * sm)) / h;
      lo[i] = ak * (-dqm_dim) / h - 0.25 * xi[i] / h;
      di[i] = ak * (dqp_di - dqm_di) / h;
      up[i] = ak * (dqp_dip) / h + 0.25 * xi[i] / h;
      rhs[i] = -F[i];
    }
    // Dirichlet rows.
    lo[0] = up[0] = rhs[0] = 0.0;
    di[0] = 1.0;
    lo[n - 1] = up[n - 1] = rhs[n - 1] = 0.0;
    di[n - 1] = 1.0;

    auto A = lo, B = di, C = up, D = rhs;
    thomas(A, B, C, D);

    // Backtracking keeping positivity and decreasing the residual.
    double step = 1.0;
    std::vector<double> trial(n), Ft(n, 0.0);
    for (int k = 0; k < 40; ++k) {
      bool pos = true;
      for (int i = 0; i < n; ++i) {
        trial[i] = th[i] + step * D[i];
        pos = pos && trial[i] > 0.0;
      }
      if (pos) {
        const double st = residual(trial, Ft);
        if (st < sup) {
          th.swap(trial);
          F.swap(Ft);
          sup = st;
          break;
        }
      }
      step *= 0.5;
      if (k == 39)
        throw ConvergenceError("solve_selfsimilar: Newton stalled", sup);
    }
  }
  if (sup > tol)
    throw ConvergenceError("solve_selfsimilar: no convergence", sup);
  prof.residual_ = sup;

  // Nodal derivatives: 4th-order central in the interior (the tails are
  // flat to machine precision, so lower-order ends are harmless).
  auto& dth = prof.dth_;
  dth.resize(n);
  for (int i = 2; i < n - 2; ++i)
    dth[i] = (-th[i + 2] + 8.0 * th[i + 1] - 8.0 * th[i - 1] + th[i - 2]) /
             (12.0 * h);
  dth[0] = (th[1] - th[0]) / h;
  dth[1] = (th[2] - th[0]) / (2.0 * h);
  dth[n - 2] = (th[n - 1] - th[n - 3]) / (2.0 * h);
  dth[n - 1] = (th[n - 1] - th[n - 2]) / h;
  return prof;
}

double SelfSimilarProfile::theta(double xi) const {
  if (xi <= -xi_max_) return theta_m_;
  if (xi >= xi_max_) return theta_p_;
  const double s = (xi + xi_max_) / dxi_;
  const int i = std::min(static_cast<int>(s), static_cast<int>(xi_.size()) - 2);
  const double u = s - i;
  const double h = dxi_;
  // cubic Hermite with nodal derivatives
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  const double h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u);
  const double h11 = u * u * (u - 1);
  return h00 * th_[i] + h10 * h * dth_[i] + h01 * th_[i + 1] +
         h11 * h * dth_[i + 1];
}

double SelfSimilarProfile::dtheta(double xi) const {
  if (xi <= -xi_max_ || xi >= xi_max_) return 0.0;
  const double s = (xi + xi_max_) / dxi_;
  const int i = std::min(static_cast<int>(s), static_cast<int>(xi_.size()) - 2);
  const double u = s - i;
  const double h = dxi_;
  const double g00 = 6 * u * (u - 1) / h;
  const double g10 = (1 - u) * (1 - 3 * u);
  const double g01 = -6 * u * (u - 1) / h;
  const double g11 = u * (3 * u - 2);
  return g00 * th_[i] + g10 * dth_[i] + g01 * th_[i + 1] + g11 * dth_[i + 1];
}

double SelfSimilarProfile::d2theta(double xi) const {
  if (xi <= -xi_max_ || xi >= xi_max_) return 0.0;
  // From a kappa (Theta'/Theta)' = -xi Theta'/2:
  //   Theta'' = Theta'^2/Theta - xi Theta' Theta / (2 a kappa).
  const double t = theta(xi), d = dtheta(xi);
  return d * d / t - xi * d * t / (2.0 * ak_);
}

double SelfSimilarProfile::d3theta(double xi) const {
  if (xi <= -xi_max_ || xi >= xi_max_) return 0.0;
  const double t = theta(xi), d = dtheta(xi), dd = d2theta(xi);
  return 2.0 * d * dd / t - d * d * d / (t * t) -
         (d * t + xi * dd * t + xi * d * d) / (2.0 * ak_);
}

double SelfSimilarProfile::eval(double t, double x) const {
  return theta(x / std::sqrt(1.0 + t));
}
double SelfSimilarProfile::eval_x(double t, double x) const {
  const double r = std::sqrt(1.0 + t);
  return dtheta(x / r) / r;
}
double SelfSimilarProfile::eval_xx(double t, double x) const {
  return d2theta(x / std::sqrt(1.0 + t)) / (1.0 + t);
}
double SelfSimilarProfile::eval_xxx(double t, double x) const {
  const double r = std::sqrt(1.0 + t);
  return d3theta(x / r) / ((1.0 + t) * r);
}
double SelfSimilarProfile::eval_t(double t, double x) const {
  const double xi = x / std::sqrt(1.0 + t);
  return -0.5 * xi * dtheta(xi) / (1.0 + t);
}
double SelfSimilarProfile::eval_xt(double t, double x) const {
  const double r = std::sqrt(1.0 + t);
  const double xi = x / r;
  // d/dt [ Theta'(xi) (1+t)^{-1/2} ]
  return -0.5 * (xi * d2theta(xi) + dtheta(xi)) / ((1.0 + t) * r);
}

std::pair<double, double> fit_gaussian_tail(const SelfSimilarProfile& prof) {
  // Least squares of log|theta - theta_+| vs xi^2 on the right tail where
  // the deviation is still well above round-off.
  const auto& xi = prof.xi_grid();
  const auto& th = prof.values();
  const double delta = std::abs(prof.theta_plus() - prof.theta_minus());
  if (delta == 0.0) return {0.0, 0.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] < 0.5 * prof.xi_max() / 12.0) continue;  // skip the core
    const double dev = std::abs(th[i] - prof.theta_plus());
    if (dev < 1e-13 * delta) break;
    const double X = xi[i] * xi[i];
    const double Y = std::log(dev);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
    ++m;
  }
  if (m < 4) throw std::runtime_error("fit_gaussian_tail: too few points");
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double icept = (sy - slope * sx) / m;
  return {std::exp(icept) / delta, -slope};
}

}  // namespace mpwave
