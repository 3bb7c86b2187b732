// Smooth Burgers solution with tanh data, evaluated by characteristics.
#pragma once

#include <stdexcept>

namespace mpwave {

// Global smooth solution of  w_t + w w_x = 0,
// w(0,x) = (w_r+w_l)/2 + (w_r-w_l)/2 tanh x,  for w_l <= w_r.
// Monotone increasing data, so characteristics never cross and
// w = w0(x - w t) has a unique root in [w_l, w_r].
class BurgersProfile {
 public:
  BurgersProfile(double w_l, double w_r);

  double left() const { return w_l_; }
  double right() const { return w_r_; }

  double initial(double x) const;         // w0(x)
  double initial_deriv(double x) const;   // w0'(x)
  double initial_deriv2(double x) const;  // w0''(x)

  double eval(double t, double x) const;  // w(t,x)
  // w_x = w0'(x0) / (1 + t w0'(x0)), x0 = x - w t; strictly positive.
  double deriv_x(double t, double x) const;
  double deriv_xx(double t, double x) const;  // w0''(x0) / (1 + t w0')^3
  double deriv_t(double t, double x) const;   // -w w_x

  // All four at once (shares the root-find).
  struct Values {
    double w, wx, wxx, wt;
  };
  Values values(double t, double x) const;

 private:
  double root(double t, double x) const;
  double w_l_, w_r_;
};

}  // namespace mpwave
