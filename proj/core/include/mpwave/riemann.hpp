// Wave-curve algebra for the Euler part of the model: rarefaction curves,
// the contact condition, and the middle states of the
// rarefaction/contact/rarefaction pattern.
#pragma once

#include <array>

#include "mpwave/errors.hpp"
#include "mpwave/thermo.hpp"

namespace mpwave {

struct EndStates {
  ThermoState left;   // (v_-, u_-, theta_-), omega ignored
  ThermoState right;  // (v_+, u_+, theta_+)
  // Far-field microrotations; both must be 0 for profile construction.
  double omega_left = 0.0;
  double omega_right = 0.0;

  void validate() const {
    left.validate();
    right.validate();
  }
};

struct WavePattern {
  EndStates end;
  ThermoState mid_left;   // (v_-^m, u^m, theta_-^m)
  ThermoState mid_right;  // (v_+^m, u^m, theta_+^m)
  double p_mid = 0.0;     // common middle pressure
  double delta = 0.0;     // total strength |theta_+ - theta_-|
  // (1-rarefaction, contact, 3-rarefaction) strengths.
  std::array<double, 3> strengths = {0.0, 0.0, 0.0};
  // Empirical ratio (sum of middle-state deviations) / delta; the constant
  // of the linear strength bound is not explicit, so this is a diagnostic.
  double strength_ratio = 0.0;
};

// State on the rarefaction curve of the given family through `anchor`, at
// specific volume v: same entropy, u from the (closed-form) curve integral.
ThermoState rarefaction_state(const GasParams& g, const ThermoState& anchor,
                              Family fam, double v);

// Closed-form curve integral  int_{v_a}^{v} lambda_fam(eta, s_a) d eta.
double rarefaction_curve_integral(const GasParams& g,
                                  const ThermoState& anchor, Family fam,
                                  double v);

// Solve for the middle states of the R- Cc R+ pattern connecting the end
// states; throws PatternMismatchError when the data would require a shock.
WavePattern solve_pattern(const GasParams& g, const EndStates& end,
                          double tol = 1e-12);

// Build end states from prescribed wave strengths (walk the curves forward
// from the left state).  dv_minus, dv_plus >= 0 are the relative specific
// volume increments of the two rarefactions; contact_ratio = theta_+^m /
// theta_-^m.  Returns a fully populated pattern.
WavePattern forward_construct(const GasParams& g, const ThermoState& left,
                              double dv_minus, double contact_ratio,
                              double dv_plus);

enum class Region { Omega_minus, Omega_c, Omega_plus };

// Domain decomposition by the middle-state characteristic speeds:
// Omega_+- = { +-2x > +-lambda_+-(v_+-^m, s_+-) t }, Omega_c closed.
Region classify_domain(double t, double x, const WavePattern& pat,
                       const GasParams& g);

}  // namespace mpwave
