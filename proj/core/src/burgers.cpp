#include "mpwave/burgers.hpp"

#include <cmath>

namespace mpwave {

BurgersProfile::BurgersProfile(double w_l, double w_r) : w_l_(w_l), w_r_(w_r) {
  if (w_l > w_r)
    throw std::domain_error("BurgersProfile: requires w_l <= w_r");
}

double BurgersProfile::initial(double x) const {
  return 0.5 * (w_r_ + w_l_) + 0.5 * (w_r_ - w_l_) * std::tanh(x);
}

double BurgersProfile::initial_deriv(double x) const {
  const double c = std::cosh(x);
  return 0.5 * (w_r_ - w_l_) / (c * c);
}

double BurgersProfile::initial_deriv2(double x) const {
  const double c = std::cosh(x);
  return -(w_r_ - w_l_) * std::tanh(x) / (c * c);
}

// Solve w = w0(x - w t): bisection to 1e-12*(w_r-w_l), then two Newton
// polish steps (the map is strictly monotone in w for t >= 0).
double BurgersProfile::root(double t, double x) const {
  if (w_r_ == w_l_) return w_l_;
  if (t == 0.0) return initial(x);

  double lo = w_l_, hi = w_r_;
  const double width_tol = 1e-12 * (w_r_ - w_l_);
  auto f = [&](double w) { return w - initial(x - w * t); };
  while (hi - lo > width_tol) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= 0.0 ? hi : lo) = mid;
  }
  double w = 0.5 * (lo + hi);
  for (int k = 0; k < 2; ++k) {
    const double x0 = x - w * t;
    const double denom = 1.0 + t * initial_deriv(x0);
    const double w_new = w - (w - initial(x0)) / denom;
    if (w_new >= w_l_ && w_new <= w_r_) w = w_new;
  }
  return w;
}

double BurgersProfile::eval(double t, double x) const { return root(t, x); }

double BurgersProfile::deriv_x(double t, double x) const {
  return values(t, x).wx;
}

double BurgersProfile::deriv_xx(double t, double x) const {
  return values(t, x).wxx;
}

double BurgersProfile::deriv_t(double t, double x) const {
  return values(t, x).wt;
}

BurgersProfile::Values BurgersProfile::values(double t, double x) const {
  Values out;
  out.w = root(t, x);
  const double x0 = x - out.w * t;
  const double d1 = initial_deriv(x0);
  const double denom = 1.0 + t * d1;
  out.wx = d1 / denom;
  out.wxx = initial_deriv2(x0) / (denom * denom * denom);
  out.wt = -out.w * out.wx;
  return out;
}

}  // namespace mpwave
