// Ideal-gas equation of state, entropy and characteristic speeds for the
// 1D micropolar fluid model in Lagrangian coordinates.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mpwave {

// Physical constants of the model.  B is the entropy-form EOS constant
// (p = B v^{-gamma} exp((gamma-1) s / R)); A is the microviscosity
// coefficient of the microrotation equation.
struct GasParams {
  double R = 1.0;      // gas constant
  double gamma = 5.0 / 3.0;
  double kappa = 1.0;  // heat conductivity
  double A = 1.0;      // microviscosity
  double B = 1.0;      // entropy-EOS constant

  void validate() const {
    if (!(R > 0.0)) throw std::domain_error("GasParams: R must be > 0");
    if (!(gamma > 1.0)) throw std::domain_error("GasParams: gamma must be > 1");
    if (!(kappa > 0.0)) throw std::domain_error("GasParams: kappa must be > 0");
    if (!(A > 0.0)) throw std::domain_error("GasParams: A must be > 0");
    if (!(B > 0.0)) throw std::domain_error("GasParams: B must be > 0");
  }
};

// Pointwise fluid state: specific volume, velocity, temperature,
// microrotation velocity.
struct ThermoState {
  double v = 1.0;
  double u = 0.0;
  double theta = 1.0;
  double omega = 0.0;

  void validate() const {
    if (!(v > 0.0)) throw std::domain_error("ThermoState: v must be > 0");
    if (!(theta > 0.0)) throw std::domain_error("ThermoState: theta must be > 0");
  }
};

enum class Family { minus, plus };

inline void require_positive(double x, const char* name) {
  if (!(x > 0.0))
    throw std::domain_error(std::string(name) + " must be > 0");
}

// p = R theta / v
inline double pressure(const GasParams& g, double v, double theta) {
  require_positive(v, "v");
  require_positive(theta, "theta");
  return g.R * theta / v;
}

// e = R theta / (gamma - 1)
inline double internal_energy(const GasParams& g, double theta) {
  require_positive(theta, "theta");
  return g.R * theta / (g.gamma - 1.0);
}

// s = R/(gamma-1) ln(R theta / B) + R ln v, so that
// p = B v^{-gamma} exp((gamma-1) s / R).
inline double entropy(const GasParams& g, double v, double theta) {
  require_positive(v, "v");
  require_positive(theta, "theta");
  return g.R / (g.gamma - 1.0) * std::log(g.R * theta / g.B) +
         g.R * std::log(v);
}

// lambda_-: -sqrt(gamma p / v), lambda_+: +sqrt(gamma p / v).
inline double char_speed(const GasParams& g, double v, double theta,
                         Family fam) {
  const double c = std::sqrt(g.gamma * pressure(g, v, theta) / v);
  return fam == Family::plus ? c : -c;
}

// Entropy-form sound speed: +-sqrt(B gamma v^{-gamma-1} e^{(gamma-1)s/R}).
// Equal to char_speed; kept as the second algebraic route for checks.
inline double char_speed_entropy_form(const GasParams& g, double v, double s,
                                      Family fam) {
  require_positive(v, "v");
  const double c = std::sqrt(g.B * g.gamma * std::pow(v, -g.gamma - 1.0) *
                             std::exp((g.gamma - 1.0) * s / g.R));
  return fam == Family::plus ? c : -c;
}

}  // namespace mpwave
