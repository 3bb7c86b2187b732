#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mpwave/diagnostics.hpp"
#include "mpwave/profiles.hpp"

using namespace mpwave;

namespace {

WavePattern small_pattern(const GasParams& g) {
  return forward_construct(g, ThermoState{1.0, 0.0, 1.0, 0.0}, 0.15, 1.1,
                           0.15);
}

// finite-difference cross-check of every ProfilePoint entry
void check_derivatives(const ProfileField& f, double t, double x,
                       double tol) {
  const double h = 1e-5;
  const ProfilePoint p = f(t, x);
  const ProfilePoint xp = f(t, x + h), xm = f(t, x - h);
  const ProfilePoint tp = f(t + h, x), tm = f(t - h, x);
  CHECK(p.Vx == doctest::Approx((xp.V - xm.V) / (2 * h)).scale(1.0).epsilon(tol));
  CHECK(p.Ux == doctest::Approx((xp.U - xm.U) / (2 * h)).scale(1.0).epsilon(tol));
  CHECK(p.Thx ==
        doctest::Approx((xp.Th - xm.Th) / (2 * h)).scale(1.0).epsilon(tol));
  CHECK(p.Vxx ==
        doctest::Approx((xp.Vx - xm.Vx) / (2 * h)).scale(1.0).epsilon(10 * tol));
  CHECK(p.Uxx ==
        doctest::Approx((xp.Ux - xm.Ux) / (2 * h)).scale(1.0).epsilon(10 * tol));
  CHECK(p.Thxx ==
        doctest::Approx((xp.Thx - xm.Thx) / (2 * h)).scale(1.0).epsilon(10 * tol));
  CHECK(p.Vt == doctest::Approx((tp.V - tm.V) / (2 * h)).scale(1.0).epsilon(tol));
  CHECK(p.Ut == doctest::Approx((tp.U - tm.U) / (2 * h)).scale(1.0).epsilon(tol));
  CHECK(p.Tht ==
        doctest::Approx((tp.Th - tm.Th) / (2 * h)).scale(1.0).epsilon(tol));
}

}  // namespace

TEST_CASE("constant profile returns the state with zero derivatives") {
  const ProfileField f = constant_profile(ThermoState{1.2, -0.3, 0.9, 0.0});
  const ProfilePoint p = f(5.0, -7.0);
  CHECK(p.V == 1.2);
  CHECK(p.U == -0.3);
  CHECK(p.Th == 0.9);
  CHECK(p.Vx == 0.0);
  CHECK(p.Ut == 0.0);
  CHECK(p.Thxx == 0.0);
}

TEST_CASE("contact wave with equal temperatures is the constant state") {
  GasParams g;
  const ThermoState s{1.0, 0.2, 1.0, 0.0};
  const auto prof = solve_selfsimilar(g, 1.0, 1.0, pressure(g, s.v, s.theta));
  const ProfileField f = contact_wave(g, s, s, prof);
  for (double t : {0.0, 3.0})
    for (double x : {-2.0, 0.0, 5.0}) {
      const ProfilePoint p = f(t, x);
      CHECK(p.V == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.U == doctest::Approx(0.2).epsilon(1e-12));
      CHECK(p.Th == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("contact wave keeps the pressure identically at p_mid") {
  GasParams g;
  const WavePattern pat = small_pattern(g);
  const auto prof = solve_selfsimilar(g, pat.mid_left.theta,
                                      pat.mid_right.theta, pat.p_mid);
  const ProfileField f = contact_wave(g, pat, prof);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ux(-20.0, 20.0), ut(0.0, 50.0);
  for (int k = 0; k < 1000; ++k) {
    const ProfilePoint p = f(ut(rng), ux(rng));
    CHECK(g.R * p.Th / p.V == doctest::Approx(pat.p_mid).epsilon(1e-14));
  }
}

TEST_CASE("contact wave rejects end states violating the contact condition") {
  GasParams g;
  const ThermoState left{1.0, 0.0, 1.0, 0.0};
  const ThermoState bad_u{1.1, 0.3, 1.1, 0.0};   // pressure ok, velocity off
  const ThermoState bad_p{1.0, 0.0, 1.3, 0.0};   // velocity ok, pressure off
  const auto prof = solve_selfsimilar(g, 1.0, 1.1, 1.0);
  CHECK_THROWS_AS(contact_wave(g, left, bad_u, prof), std::invalid_argument);
  CHECK_THROWS_AS(contact_wave(g, left, bad_p, prof), std::invalid_argument);
}

TEST_CASE("contact-wave derivatives are consistent chain rules") {
  GasParams g;
  const WavePattern pat = small_pattern(g);
  const auto prof = solve_selfsimilar(g, pat.mid_left.theta,
                                      pat.mid_right.theta, pat.p_mid);
  const ProfileField f = contact_wave(g, pat, prof);
  for (double t : {0.5, 4.0, 20.0})
    for (double x : {-3.0, 0.0, 1.1, 6.0}) check_derivatives(f, t, x, 1e-5);
}

TEST_CASE("contact acceleration decays like the three-halves power") {
  GasParams g;
  const WavePattern pat = small_pattern(g);
  const auto prof = solve_selfsimilar(g, pat.mid_left.theta,
                                      pat.mid_right.theta, pat.p_mid);
  const ProfileField f = contact_wave(g, pat, prof);
  std::vector<std::pair<double, double>> series;
  for (double t : {1.0, 3.0, 10.0, 30.0, 100.0}) {
    double sup = 0.0;
    const double w = 3.0 * std::sqrt(1.0 + t);
    for (int i = -200; i <= 200; ++i)
      sup = std::max(sup, std::abs(f(t, w * i / 200.0).Ut));
    series.emplace_back(t, sup);
  }
  const FitResult fit = fit_decay(series);
  CHECK(fit.slope > -1.65);
  CHECK(fit.slope < -1.35);
}

TEST_CASE("zero-strength rarefaction is the constant anchor state") {
  GasParams g;
  const ThermoState a{1.0, 0.1, 1.0, 0.0};
  const ProfileField f = smooth_rarefaction(g, a, a, Family::plus);
  for (double t : {0.0, 7.0})
    for (double x : {-5.0, 2.0}) {
      const ProfilePoint p = f(t, x);
      CHECK(p.V == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.U == doctest::Approx(0.1).epsilon(1e-12));
      CHECK(p.Vx == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("rarefaction profile expands and satisfies the Euler system") {
  GasParams g;
  const WavePattern pat = small_pattern(g);
  for (auto [anchor, mid, fam] :
       {std::tuple{pat.end.left, pat.mid_left, Family::minus},
        std::tuple{pat.end.right, pat.mid_right, Family::plus}}) {
    const ProfileField f = smooth_rarefaction(g, anchor, mid, fam);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ux(-40.0, 40.0), ut(0.0, 30.0);
    const double cR = g.R / (g.gamma - 1.0);
    for (int k = 0; k < 1000; ++k) {
      const double t = ut(rng), x = ux(rng);
      const ProfilePoint p = f(t, x);
      CHECK(p.Ux >= 0.0);
      // mass, momentum and energy equations hold pointwise
      const double Px = g.R * (p.Thx * p.V - p.Th * p.Vx) / (p.V * p.V);
      const double P = g.R * p.Th / p.V;
      CHECK(std::abs(p.Vt - p.Ux) < 1e-9);
      CHECK(std::abs(p.Ut + Px) < 1e-9);
      CHECK(std::abs(cR * p.Tht + P * p.Ux) < 1e-9);
    }
    for (double t : {0.5, 6.0})
      for (double x : {-4.0, 0.0, 3.0}) check_derivatives(f, t, x, 1e-5);
  }
}

TEST_CASE("rarefaction construction rejects states off the wave curve") {
  GasParams g;
  const ThermoState a{1.0, 0.0, 1.0, 0.0};
  ThermoState off = rarefaction_state(g, a, Family::plus, 1.2);
  off.theta *= 1.01;  // breaks the isentrope
  CHECK_THROWS_AS(smooth_rarefaction(g, a, off, Family::plus),
                  std::invalid_argument);
}

TEST_CASE("composite superposition equals the components minus the middles") {
  GasParams g;
  const WavePattern pat = small_pattern(g);
  const CompositeWave w = build_composite(g, pat);
  for (double t : {0.0, 2.0, 11.0}) {
    for (double x : {-17.0, -1.0, 0.0, 2.3, 19.0}) {
      const ProfilePoint c = w.field(t, x);
      const ProfilePoint a = w.rar_minus(t, x), b = w.contact(t, x),
                         d = w.rar_plus(t, x);
      CHECK(c.V == doctest::Approx(a.V + b.V + d.V - pat.mid_left.v -
                                   pat.mid_right.v)
                       .epsilon(1e-13));
      CHECK(c.U == doctest::Approx(a.U + b.U + d.U - 2.0 * pat.mid_left.u)
                       .epsilon(1e-13));
      CHECK(c.Th == doctest::Approx(a.Th + b.Th + d.Th - pat.mid_left.theta -
                                    pat.mid_right.theta)
                        .epsilon(1e-13));
      CHECK(c.Vx == doctest::Approx(a.Vx + b.Vx + d.Vx).epsilon(1e-13));
      CHECK(c.Ut == doctest::Approx(a.Ut + b.Ut + d.Ut).epsilon(1e-13));
    }
  }
}

TEST_CASE("composite far fields match the end states") {
  GasParams g;
  const WavePattern pat = small_pattern(g);
  const CompositeWave w = build_composite(g, pat);
  for (double t : {0.0, 5.0}) {
    const ProfilePoint pl = w.field(t, -300.0);
    CHECK(pl.V == doctest::Approx(pat.end.left.v).epsilon(1e-8));
    CHECK(pl.U == doctest::Approx(pat.end.left.u).epsilon(1e-8));
    CHECK(pl.Th == doctest::Approx(pat.end.left.theta).epsilon(1e-8));
    const ProfilePoint pr = w.field(t, 300.0);
    CHECK(pr.V == doctest::Approx(pat.end.right.v).epsilon(1e-8));
    CHECK(pr.U == doctest::Approx(pat.end.right.u).epsilon(1e-8));
    CHECK(pr.Th == doctest::Approx(pat.end.right.theta).epsilon(1e-8));
  }
}

TEST_CASE("zero-strength composite is the constant left state") {
  GasParams g;
  const WavePattern pat =
      forward_construct(g, ThermoState{1.0, 0.0, 1.0, 0.0}, 0.0, 1.0, 0.0);
  const CompositeWave w = build_composite(g, pat);
  for (double t : {0.0, 4.0})
    for (double x : {-10.0, 0.0, 10.0}) {
      const ProfilePoint p = w.field(t, x);
      CHECK(p.V == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(p.U == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(p.Th == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(p.Vx) < 1e-12);
      CHECK(std::abs(p.Tht) < 1e-12);
    }
}
