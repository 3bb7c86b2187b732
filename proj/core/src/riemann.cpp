#include "mpwave/riemann.hpp"

#include <cmath>
#include <sstream>

namespace mpwave {

// lambda_fam(eta, s_anchor) = lambda_fam(v_a) * (v_a / eta)^{(gamma+1)/2},
// a power law, so the curve integral is analytic.
double rarefaction_curve_integral(const GasParams& g,
                                  const ThermoState& anchor, Family fam,
                                  double v) {
  require_positive(v, "v");
  const double lam_a = char_speed(g, anchor.v, anchor.theta, fam);
  const double q = (1.0 - g.gamma) / 2.0;  // exponent after integration
  // int_{v_a}^{v} lam_a (v_a/eta)^{(gamma+1)/2} d eta
  //   = lam_a v_a^{(gamma+1)/2} (v^q - v_a^q) / q
  return lam_a * std::pow(anchor.v, (g.gamma + 1.0) / 2.0) *
         (std::pow(v, q) - std::pow(anchor.v, q)) / q;
}

ThermoState rarefaction_state(const GasParams& g, const ThermoState& anchor,
                              Family fam, double v) {
  require_positive(v, "v");
  anchor.validate();
  ThermoState out;
  out.v = v;
  out.u = anchor.u - rarefaction_curve_integral(g, anchor, fam, v);
  out.theta = anchor.theta * std::pow(anchor.v / v, g.gamma - 1.0);
  out.omega = 0.0;
  return out;
}

namespace {

// Residuals of the 2x2 contact-matching system in the unknowns
// (v_-^m, v_+^m): velocity and pressure jumps across the contact.
std::array<double, 2> pattern_residual(const GasParams& g,
                                       const EndStates& end, double vm_l,
                                       double vm_r) {
  const ThermoState ml = rarefaction_state(g, end.left, Family::minus, vm_l);
  const ThermoState mr = rarefaction_state(g, end.right, Family::plus, vm_r);
  return {ml.u - mr.u,
          pressure(g, ml.v, ml.theta) - pressure(g, mr.v, mr.theta)};
}

double res_norm(const std::array<double, 2>& r) {
  return std::abs(r[0]) + std::abs(r[1]);
}

}  // namespace

WavePattern solve_pattern(const GasParams& g, const EndStates& end,
                          double tol) {
  g.validate();
  end.validate();
  if (!(tol > 0.0)) throw std::domain_error("solve_pattern: tol must be > 0");

  double vm_l = end.left.v;
  double vm_r = end.right.v;
  auto r = pattern_residual(g, end, vm_l, vm_r);

  const int max_iter = 100;
  int iter = 0;
  while (res_norm(r) > tol && iter++ < max_iter) {
    // Numerical Jacobian.
    const double hl = 1e-7 * vm_l;
    const double hr = 1e-7 * vm_r;
    auto rl = pattern_residual(g, end, vm_l + hl, vm_r);
    auto rr = pattern_residual(g, end, vm_l, vm_r + hr);
    const double j00 = (rl[0] - r[0]) / hl, j01 = (rr[0] - r[0]) / hr;
    const double j10 = (rl[1] - r[1]) / hl, j11 = (rr[1] - r[1]) / hr;
    const double det = j00 * j11 - j01 * j10;
    if (det == 0.0)
      throw ConvergenceError("solve_pattern: singular Jacobian", res_norm(r));
    double dl = -(j11 * r[0] - j01 * r[1]) / det;
    double dr = -(-j10 * r[0] + j00 * r[1]) / det;

    // Damped update keeping both volumes positive; bisection fallback on
    // the step length when the residual does not decrease.
    double step = 1.0;
    const double base = res_norm(r);
    for (int k = 0; k < 40; ++k) {
      const double cl = vm_l + step * dl;
      const double cr = vm_r + step * dr;
      if (cl > 0.0 && cr > 0.0) {
        auto rc = pattern_residual(g, end, cl, cr);
        if (res_norm(rc) < base) {
          vm_l = cl;
          vm_r = cr;
          r = rc;
          break;
        }
      }
      step *= 0.5;
      if (k == 39)
        throw ConvergenceError("solve_pattern: line search stalled", base);
    }
  }
  if (res_norm(r) > tol)
    throw ConvergenceError("solve_pattern: no convergence", res_norm(r));

  // Rarefaction orientation: middle volumes must not fall below the end
  // volumes (the curves are parameterized by v > v_+-).
  const double slack = 1e-9 * (end.left.v + end.right.v);
  if (vm_l < end.left.v - slack || vm_r < end.right.v - slack) {
    std::ostringstream os;
    os << "solve_pattern: pattern mismatch, data requires a shock "
       << "(v_-^m=" << vm_l << " vs v_-=" << end.left.v << ", v_+^m=" << vm_r
       << " vs v_+=" << end.right.v << ")";
    throw PatternMismatchError(os.str());
  }

  WavePattern pat;
  pat.end = end;
  pat.mid_left = rarefaction_state(g, end.left, Family::minus, vm_l);
  pat.mid_right = rarefaction_state(g, end.right, Family::plus, vm_r);
  pat.p_mid = 0.5 * (pressure(g, pat.mid_left.v, pat.mid_left.theta) +
                     pressure(g, pat.mid_right.v, pat.mid_right.theta));
  pat.delta = std::abs(end.right.theta - end.left.theta);
  pat.strengths = {std::abs(pat.mid_left.v - end.left.v),
                   std::abs(pat.mid_right.theta - pat.mid_left.theta),
                   std::abs(pat.mid_right.v - end.right.v)};
  const double dev =
      std::abs(pat.mid_left.v - end.left.v) +
      std::abs(pat.mid_left.u - end.left.u) +
      std::abs(pat.mid_left.theta - end.left.theta) +
      std::abs(pat.mid_right.v - end.right.v) +
      std::abs(pat.mid_right.u - end.right.u) +
      std::abs(pat.mid_right.theta - end.right.theta);
  pat.strength_ratio = pat.delta > 0.0 ? dev / pat.delta : 0.0;
  return pat;
}

WavePattern forward_construct(const GasParams& g, const ThermoState& left,
                              double dv_minus, double contact_ratio,
                              double dv_plus) {
  g.validate();
  left.validate();
  if (dv_minus < 0.0 || dv_plus < 0.0 || !(contact_ratio > 0.0))
    throw std::domain_error("forward_construct: invalid strengths");

  const ThermoState mid_l =
      rarefaction_state(g, left, Family::minus, left.v * (1.0 + dv_minus));
  const double p_mid = pressure(g, mid_l.v, mid_l.theta);

  ThermoState mid_r;
  mid_r.theta = contact_ratio * mid_l.theta;
  mid_r.v = g.R * mid_r.theta / p_mid;
  mid_r.u = mid_l.u;

  // Walk the 3-curve outward: the right end state has v_+ = v_+^m/(1+dv_plus)
  // and lies on the same isentrope; the curve integral is additive along the
  // isentrope, so mid_r == rarefaction_state(right, plus, mid_r.v).
  const ThermoState right =
      rarefaction_state(g, mid_r, Family::plus, mid_r.v / (1.0 + dv_plus));

  WavePattern pat;
  pat.end.left = left;
  pat.end.right = right;
  pat.mid_left = mid_l;
  pat.mid_right = mid_r;
  pat.p_mid = p_mid;
  pat.delta = std::abs(right.theta - left.theta);
  pat.strengths = {std::abs(mid_l.v - left.v),
                   std::abs(mid_r.theta - mid_l.theta),
                   std::abs(mid_r.v - right.v)};
  const double dev = std::abs(mid_l.v - left.v) + std::abs(mid_l.u - left.u) +
                     std::abs(mid_l.theta - left.theta) +
                     std::abs(mid_r.v - right.v) +
                     std::abs(mid_r.u - right.u) +
                     std::abs(mid_r.theta - right.theta);
  pat.strength_ratio = pat.delta > 0.0 ? dev / pat.delta : 0.0;
  return pat;
}

Region classify_domain(double t, double x, const WavePattern& pat,
                       const GasParams& g) {
  const double lam_m =
      char_speed(g, pat.mid_left.v, pat.mid_left.theta, Family::minus);
  const double lam_p =
      char_speed(g, pat.mid_right.v, pat.mid_right.theta, Family::plus);
  if (2.0 * x < lam_m * t) return Region::Omega_minus;
  if (2.0 * x > lam_p * t) return Region::Omega_plus;
  return Region::Omega_c;
}

}  // namespace mpwave
