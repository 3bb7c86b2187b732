// Measurement machinery: discrete norms, perturbation and residual
// fields, heat-kernel weights, the relative-entropy energy, and
// decay-rate fitting.
#pragma once

#include <utility>
#include <vector>

#include "mpwave/profiles.hpp"
#include "mpwave/riemann.hpp"
#include "mpwave/solver.hpp"

namespace mpwave {

// Perturbation fields phi = v - V, psi = u - U, zeta = theta - Theta,
// omega (target 0), on the solver grid.
struct PerturbationFields {
  std::vector<double> phi, psi, zeta, omega;
};

PerturbationFields perturbation(const SimState& s,
                                const ProfileField& composite);

// Discrete norms on a uniform grid (trapezoid quadrature; derivatives by
// second-order central differences, one-sided at the ends).
double norm_sup(const std::vector<double>& f);
double norm_l1(const std::vector<double>& f, double dx);
double norm_l2(const std::vector<double>& f, double dx);
std::vector<double> central_deriv(const std::vector<double>& f, double dx);
double norm_h1(const std::vector<double>& f, double dx);
double norm_h2(const std::vector<double>& f, double dx);

// Entropy functional Phi(s) = s - 1 - ln s  (>= 0, = 0 iff s = 1).
double entropy_Phi(double s);

// Relative-entropy energy
//   int [ Theta Phi(v/V) + psi^2/2 + Theta Phi(theta/Theta) + omega^2/2 ] dx
double entropy_energy(const SimState& s, const ProfileField& composite);

// Gaussian heat-kernel weight pair h, g of the weighted estimates:
//   h = (1+t)^{-1/2} exp(-alpha x^2/(1+t)),  g = int_{-inf}^x h dy.
struct KernelWeight {
  double alpha = 1.0;
  double h(double t, double x) const;
  double g(double t, double x) const;
  double sup_g() const;  // sqrt(pi) alpha^{-1/2}, exact
};

struct KernelCheckReport {
  double sup_g_error = 0.0;       // |numeric sup g - exact| / exact
  double identity_residual = 0.0; // max |4 alpha g_t - h_x| (FD in t)
};

KernelCheckReport kernel_check(const KernelWeight& w,
                               const std::vector<double>& t_samples,
                               int n_random = 100, unsigned seed = 7);

// Weighted integral  int F^2 h^2 dx  (trapezoid on the given grid).
double weighted_square_integral(const KernelWeight& w, double t,
                                const std::vector<double>& x,
                                const std::vector<double>& F);

// Momentum and energy defect fields of the composite wave,
//   R1 = U_t + P_x,   R2 = (kappa Theta_x / V)_x - R/(gamma-1) Theta_t - P U_x,
// together with the decomposition pieces R1^1 = (P - P_- - P_+)_x and the
// contact acceleration U^c_t.
struct ResidualFields {
  std::vector<double> x;
  std::vector<double> R1, R2;
  std::vector<double> R1_1;   // (P - P_- - P_+)_x
  std::vector<double> Uc_t;   // contact-wave acceleration
};

ResidualFields residual_fields(const GasParams& g, const CompositeWave& w,
                               double t, const std::vector<double>& x);

// Norm ledger emitted at the diagnostic cadence.
struct NormReport {
  double t = 0.0;
  double sup_phi = 0, sup_psi = 0, sup_zeta = 0, sup_omega = 0;
  double l2_phi = 0, l2_psi = 0, l2_zeta = 0, l2_omega = 0;
  double h1_phi = 0, h1_psi = 0, h1_zeta = 0, h1_omega = 0;
  double h2_phi = 0, h2_psi = 0, h2_zeta = 0, h2_omega = 0;
  double weighted_integral = 0;  // int (phi^2+psi^2+zeta^2) h^2 dx
  double entropy = 0;            // relative-entropy energy
  double omega_dissipation = 0;
  double conservation_defect = 0;
};

NormReport make_norm_report(const SimState& s, const ProfileField& composite,
                            const KernelWeight& w);

// Least-squares fit of log(value) vs log(1+t): returns (slope, intercept,
// r^2).  Requires >= 4 positive samples.
struct FitResult {
  double slope = 0, intercept = 0, r2 = 0;
};
FitResult fit_decay(const std::vector<std::pair<double, double>>& series);

// Least-squares fit of log(value) vs t (exponential rate).
FitResult fit_exponential(const std::vector<std::pair<double, double>>& series);

// Per-region sup and L2 norms of a field given on grid x at time t.
struct RegionNorms {
  double sup_minus = 0, sup_c = 0, sup_plus = 0;
  double l2_minus = 0, l2_c = 0, l2_plus = 0;
};
RegionNorms region_norms(const std::vector<double>& x,
                         const std::vector<double>& f, double t,
                         const WavePattern& pat, const GasParams& g);

}  // namespace mpwave
