// Self-similar profile of the nonlinear diffusion equation driving the
// viscous contact wave:  a kappa (Theta'/Theta)' + (xi/2) Theta' = 0 on
// [-Xi, Xi], Theta(-Xi) = theta_-, Theta(Xi) = theta_+, xi = x/sqrt(1+t).
#pragma once

#include <vector>

#include "mpwave/thermo.hpp"

namespace mpwave {

class SelfSimilarProfile {
 public:
  double theta_minus() const { return theta_m_; }
  double theta_plus() const { return theta_p_; }
  double a_kappa() const { return ak_; }
  double xi_max() const { return xi_max_; }
  const std::vector<double>& xi_grid() const { return xi_; }
  const std::vector<double>& values() const { return th_; }
  const std::vector<double>& derivs() const { return dth_; }
  // Sup-norm residual of the discrete BVP at the solution.
  double bvp_residual() const { return residual_; }

  // Similarity-variable evaluators (cubic Hermite between grid nodes;
  // constant theta_+- with zero derivatives beyond the truncation).
  double theta(double xi) const;
  double dtheta(double xi) const;
  // Second/third derivatives via the ODE:
  //   Theta'' = Theta'^2/Theta - xi Theta'/(2 a kappa).
  double d2theta(double xi) const;
  double d3theta(double xi) const;

  // Time-dependent form Theta(t,x) = theta(x/sqrt(1+t)) and derivatives.
  double eval(double t, double x) const;
  double eval_x(double t, double x) const;
  double eval_xx(double t, double x) const;
  double eval_xxx(double t, double x) const;
  double eval_t(double t, double x) const;
  double eval_xt(double t, double x) const;

  friend SelfSimilarProfile solve_selfsimilar(const GasParams&, double, double,
                                              double, double, int, double);

 private:
  double theta_m_ = 0, theta_p_ = 0, ak_ = 0, xi_max_ = 0, dxi_ = 0;
  double residual_ = 0;
  std::vector<double> xi_, th_, dth_;
};

// Damped-Newton relaxation on a second-order finite-difference grid with
// n nodes on [-Xi, Xi]; initial guess is the erf profile of the linear
// problem.  a kappa = kappa p_+ (gamma-1) / (gamma R^2) with p_+ supplied
// through `p_plus`.  Xi <= 0 selects the default truncation; a Xi too
// small for the Gaussian tail to drop below tol is rejected.
SelfSimilarProfile solve_selfsimilar(const GasParams& g, double theta_minus,
                                     double theta_plus, double p_plus,
                                     double Xi = 0.0, int n = 4001,
                                     double tol = 1e-10);

// Default truncation Xi = 12 sqrt(2 a kappa) (Gaussian tail < 1e-15).
double default_xi(const GasParams& g, double p_plus);

// Fit |theta(xi) - theta_+-| ~ C delta exp(-c0 xi^2) over the tail region;
// returns (C, c0).  c0 > 0 for any nonconstant profile.
std::pair<double, double> fit_gaussian_tail(const SelfSimilarProfile& prof);

}  // namespace mpwave
