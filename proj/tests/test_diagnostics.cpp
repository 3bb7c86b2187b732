#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mpwave/diagnostics.hpp"
#include "mpwave/verify.hpp"

using namespace mpwave;

namespace {

SimState state_from_field(const GasParams& g, const Grid& grid,
                          const ProfileField& f, double t = 0.0) {
  return SimState::from_profile(g, grid, f, t);
}

}  // namespace

TEST_CASE("discrete norms of a sine agree with the analytic values") {
  const int n = 4000;
  const double L = M_PI;
  const double dx = 2.0 * L / n;
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = std::sin(-L + (i + 0.5) * dx);
  CHECK(norm_sup(f) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(norm_l1(f, dx) == doctest::Approx(4.0).epsilon(1e-3));
  CHECK(norm_l2(f, dx) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-3));
  CHECK(norm_h1(f, dx) >= norm_l2(f, dx));
  CHECK(norm_h2(f, dx) >= norm_h1(f, dx));
}

TEST_CASE("midpoint and trapezoid quadratures agree to second order") {
  // use an integrand with non-vanishing endpoint derivatives: for a
  // Gaussian both rules are exponentially accurate and the difference
  // underflows, telling us nothing about the order
  auto sq_norm = [](int n) {
    const double dx = 1.0 / n;
    double mid = 0.0, trap = 0.0;
    for (int i = 0; i < n; ++i) {
      const double xm = (i + 0.5) * dx;
      mid += std::exp(2.0 * xm) * dx;
      const double a = std::exp(i * dx), b = std::exp((i + 1) * dx);
      trap += 0.5 * (a * a + b * b) * dx;
    }
    return std::abs(mid - trap);
  };
  const double d1 = sq_norm(100), d2 = sq_norm(200);
  CHECK(d1 / d2 > 3.5);
}

TEST_CASE("entropy functional basics") {
  CHECK(entropy_Phi(1.0) == 0.0);
  CHECK(entropy_Phi(std::exp(1.0)) ==
        doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-12));
  double prev_slope = -1e300;
  for (double s = 0.1; s < 10.0; s += 0.1) {
    CHECK(entropy_Phi(s) >= 0.0);
    // convexity: difference quotients increase
    const double slope =
        (entropy_Phi(s + 0.05) - entropy_Phi(s)) / 0.05;
    CHECK(slope > prev_slope);
    prev_slope = slope;
  }
  CHECK_THROWS_AS(entropy_Phi(0.0), std::domain_error);
}

TEST_CASE("relative-entropy energy is zero on the profile and quadratic near it") {
  GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));
  const Grid grid{80.0, 1024};
  SimState s = state_from_field(g, grid, w.field);
  CHECK(entropy_energy(s, w.field) == doctest::Approx(0.0).epsilon(1e-14));

  double prev_ratio = 0.0;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    SimState sp = s;
    PerturbationSpec p;
    p.amplitude = eps;
    apply_perturbation(sp, p);
    const PerturbationFields f = perturbation(sp, w.field);
    const double n2 = std::pow(norm_l2(f.phi, grid.dx()), 2) +
                      std::pow(norm_l2(f.psi, grid.dx()), 2) +
                      std::pow(norm_l2(f.zeta, grid.dx()), 2) +
                      std::pow(norm_l2(f.omega, grid.dx()), 2);
    const double ratio = entropy_energy(sp, w.field) / n2;
    CHECK(ratio > 0.1);
    CHECK(ratio < 10.0);
    if (prev_ratio > 0.0)
      CHECK(ratio == doctest::Approx(prev_ratio).epsilon(0.2));
    prev_ratio = ratio;
  }
}

TEST_CASE("perturbation fields vanish on the profile and isolate a bump") {
  GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));
  const Grid grid{40.0, 512};
  SimState s = state_from_field(g, grid, w.field);
  const PerturbationFields zero = perturbation(s, w.field);
  CHECK(norm_sup(zero.phi) == 0.0);
  CHECK(norm_sup(zero.psi) == 0.0);
  CHECK(norm_sup(zero.zeta) == 0.0);

  PerturbationSpec p;
  p.amplitude = 1e-2;
  p.in_u = p.in_theta = p.in_omega = false;
  apply_perturbation(s, p);
  const PerturbationFields f = perturbation(s, w.field);
  // the bump peak falls between cell centres, so the discrete sup is a
  // touch below the analytic amplitude
  CHECK(norm_sup(f.phi) == doctest::Approx(1e-2).epsilon(1e-2));
  CHECK(norm_sup(f.psi) == 0.0);
  CHECK(norm_sup(f.zeta) == 0.0);
  CHECK(norm_sup(f.omega) == 0.0);
}

TEST_CASE("heat-kernel weight identities") {
  SUBCASE("exact sup of g at alpha = 1 is sqrt(pi)") {
    KernelWeight w{1.0};
    CHECK(w.sup_g() == doctest::Approx(1.7724539).epsilon(1e-6));
    const auto rep = kernel_check(w, {0.0, 2.0, 10.0});
    CHECK(rep.sup_g_error < 1e-6);
    CHECK(rep.identity_residual < 1e-8);
  }
  SUBCASE("alpha scaling") {
    KernelWeight w4{4.0};
    CHECK(w4.sup_g() ==
          doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
    const auto rep = kernel_check(w4, {1.0});
    CHECK(rep.sup_g_error < 1e-6);
  }
  SUBCASE("h is the x-derivative of g") {
    KernelWeight w{0.7};
    for (double t : {0.0, 3.0})
      for (double x : {-2.0, 0.5, 4.0}) {
        const double h = 1e-6;
        const double fd = (w.g(t, x + h) - w.g(t, x - h)) / (2 * h);
        CHECK(w.h(t, x) == doctest::Approx(fd).epsilon(1e-6));
      }
  }
}

TEST_CASE("decay fitting") {
  SUBCASE("exact power law") {
    std::vector<std::pair<double, double>> s;
    for (double t : {1.0, 5.0, 10.0, 50.0, 100.0})
      s.emplace_back(t, std::pow(1.0 + t, -1.5));
    const FitResult f = fit_decay(s);
    CHECK(f.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("constant series") {
    std::vector<std::pair<double, double>> s;
    for (double t : {1.0, 5.0, 10.0, 50.0}) s.emplace_back(t, 2.0);
    CHECK(fit_decay(s).slope == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("noisy power law recovered within 0.1") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> noise(-0.05, 0.05);
    std::vector<std::pair<double, double>> s;
    for (double t = 1.0; t <= 100.0; t *= 1.6)
      s.emplace_back(t, std::pow(1.0 + t, -1.25) * (1.0 + noise(rng)));
    CHECK(std::abs(fit_decay(s).slope + 1.25) < 0.1);
  }
  SUBCASE("input validation") {
    std::vector<std::pair<double, double>> s = {{1.0, 1.0}, {2.0, 0.5}};
    CHECK_THROWS_AS(fit_decay(s), std::invalid_argument);
    s = {{1.0, 1.0}, {2.0, 0.5}, {3.0, -0.1}, {4.0, 0.2}};
    CHECK_THROWS_AS(fit_decay(s), std::invalid_argument);
  }
  SUBCASE("exponential fit") {
    std::vector<std::pair<double, double>> s;
    for (double t : {1.0, 2.0, 3.0, 4.0})
      s.emplace_back(t, 3.0 * std::exp(-0.8 * t));
    CHECK(fit_exponential(s).slope == doctest::Approx(-0.8).epsilon(1e-10));
  }
}

TEST_CASE("composite residuals vanish at zero strength") {
  GasParams g = default_gas();
  const WavePattern pat =
      forward_construct(g, ThermoState{1.0, 0.0, 1.0, 0.0}, 0.0, 1.0, 0.0);
  const CompositeWave w = build_composite(g, pat);
  std::vector<double> x;
  for (double xx = -20.0; xx <= 20.0; xx += 0.5) x.push_back(xx);
  const ResidualFields f = residual_fields(g, w, 2.0, x);
  CHECK(norm_sup(f.R1) < 1e-12);
  CHECK(norm_sup(f.R2) < 1e-12);
}

TEST_CASE("the two momentum-defect routes agree") {
  // direct defect U_t + P_x  versus  (P - P_- - P_+)_x + contact U_t
  GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));
  std::vector<double> x;
  for (double xx = -60.0; xx <= 60.0; xx += 0.25) x.push_back(xx);
  for (double t : {0.5, 3.0, 20.0}) {
    const ResidualFields f = residual_fields(g, w, t, x);
    for (std::size_t i = 0; i < x.size(); ++i)
      CHECK(std::abs(f.R1[i] - (f.R1_1[i] + f.Uc_t[i])) < 1e-8);
  }
}

TEST_CASE("Sobolev interpolation inequality on smooth decaying fields") {
  const int n = 8192;
  const double L = 30.0, dx = 2.0 * L / n;
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> ua(0.3, 2.0);
  for (int k = 0; k < 20; ++k) {
    const double a = ua(rng), b = ua(rng), c = ua(rng);
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) {
      const double x = -L + (i + 0.5) * dx;
      f[i] = a * std::exp(-b * x * x) * std::cos(c * x);
    }
    const double sup = norm_sup(f);
    const double l2 = norm_l2(f, dx);
    const double dl2 = norm_l2(central_deriv(f, dx), dx);
    CHECK(sup * sup <= l2 * dl2 * (1.0 + 1e-6));
  }
}

TEST_CASE("region norms split by the characteristic cones") {
  GasParams g = default_gas();
  const WavePattern pat = default_pattern(g);
  const double t = 6.0;
  const double lam_p =
      char_speed(g, pat.mid_right.v, pat.mid_right.theta, Family::plus);
  std::vector<double> x, f;
  for (double xx = -40.0; xx <= 40.0; xx += 0.1) {
    x.push_back(xx);
    f.push_back(xx > 0.5 * lam_p * t ? 1.0 : 0.0);
  }
  const RegionNorms r = region_norms(x, f, t, pat, g);
  CHECK(r.sup_minus == 0.0);
  CHECK(r.sup_c == 0.0);
  CHECK(r.l2_minus == 0.0);
  CHECK(r.sup_plus == 1.0);
  CHECK(r.l2_plus > 0.0);
}

TEST_CASE("weighted integral matches a closed form") {
  // F = 1: integral of h^2 dx = sqrt(pi/(2 alpha) (1+t)) / sqrt(1+t)... use
  // direct analytic value  int h^2 dx = sqrt(pi/(2 alpha)) (1+t)^{-1/2}
  KernelWeight w{0.9};
  std::vector<double> x, F;
  for (double xx = -60.0; xx <= 60.0; xx += 0.01) {
    x.push_back(xx);
    F.push_back(1.0);
  }
  for (double t : {0.0, 3.0}) {
    const double exact =
        std::sqrt(M_PI / (2.0 * w.alpha)) / std::sqrt(1.0 + t);
    CHECK(weighted_square_integral(w, t, x, F) ==
          doctest::Approx(exact).epsilon(1e-6));
  }
}
