#include <doctest.h>

#include <cmath>
#include <random>

#include "rellich/errors.hpp"
#include "rellich/params.hpp"
#include "rellich/spectra.hpp"

using namespace rellich;

namespace {

// Larger root of 3a^2 - 2(n+4)a - n^2 + 4n + 4 is above n; the bound is the
// smaller one, found here by bisection on the quadratic itself.
double quadratic_root(int n) {
  auto q = [n](double a) { return 3 * a * a - 2.0 * (n + 4) * a - n * n + 4.0 * n + 4; };
  double lo = -100.0, hi = (n + 4) / 3.0;  // vertex
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (q(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("params") {
  TEST_CASE("derived constants") {
    const Params p = derive(3, 0.0);
    CHECK(p.gamma == -0.75);
    CHECK(p.h == 0.25);
    CHECK(p.A == -2.0);
    CHECK(p.B == p.gamma);
    CHECK(p.C == p.h);

    const Params q = derive(4, 0.0);
    CHECK(q.gamma == 0.0);
    CHECK(q.h == 0.0);
    CHECK(q.critical());

    const Params r = derive(2, 0.0);
    CHECK(r.gamma == -1.0);
    CHECK(r.h == 1.0);

    const exact::Constants c = exact::derive(3, Rational(0));
    CHECK(c.gamma == Rational(-3, 4));
    CHECK(c.h == Rational(1, 4));
  }

  TEST_CASE("invalid dimension") {
    CHECK_THROWS_AS(derive(1, 0.0), InvalidArgument);
    CHECK_THROWS_AS(derive(3, NAN), InvalidArgument);
    CHECK_THROWS_AS(critical_constant(1), InvalidArgument);
    CHECK_THROWS_AS(alpha_star_bound(2), InvalidArgument);
  }

  TEST_CASE("delta_rad and mode values") {
    CHECK(exact::derive(3, Rational(0)).delta_rad == Rational(9, 4));
    CHECK(exact::derive(2, Rational(0)).delta_rad == Rational(1));
    CHECK(exact::derive(4, Rational(0)).delta_rad == Rational(4));
    CHECK(delta_rad(derive(3, 0.0)) == 2.25);

    CHECK(exact::mode_value(3, Rational(0), Rational(0)) == Rational(9, 4));
    CHECK(exact::mode_value(3, Rational(0), Rational(2)) == Rational(25, 36));
    CHECK(exact::mode_value(5, Rational(0), Rational(4)) == Rational(441, 68));
    CHECK(mode_value(derive(3, 0.0), 2.0) == doctest::Approx(25.0 / 36.0).epsilon(1e-15));
  }

  TEST_CASE("h + lambda = 0 is an error, not NaN") {
    CHECK_THROWS_AS(mode_value(derive(4, 0.0), 0.0), DegenerateDenominator);
    CHECK_THROWS_AS(exact::mode_value(4, Rational(0), Rational(0)), DegenerateDenominator);
    CHECK(mode_value(derive(4, 0.0), 3.0) == 3.0);
  }

  TEST_CASE("best mode constant on the sphere") {
    const ModeConstant a = best_mode_constant(derive(3, 0.0), full_sphere_spectrum(3, 4));
    CHECK(a.value == doctest::Approx(25.0 / 36.0).epsilon(1e-15));
    CHECK(a.lambda == 2.0);

    const ModeConstant b = best_mode_constant(derive(2, 0.0), full_sphere_spectrum(2, 4));
    CHECK(b.kernel_hit);
    CHECK(b.value == 0.0);

    const ModeConstant c = best_mode_constant(derive(5, 0.0), full_sphere_spectrum(5, 4));
    CHECK(c.value == 6.25);
    CHECK(c.lambda == 0.0);

    const exact::SphereModeConstant e = exact::best_mode_constant_sphere(3, Rational(0));
    CHECK(e.value == Rational(25, 36));
    CHECK(e.k == 1);
  }

  TEST_CASE("critical constant") {
    CHECK(critical_constant(4) == 3.0);
    CHECK(critical_constant(3) == 1.0);
    CHECK(critical_constant(2) == 0.0);
    CHECK(exact::critical_constant(6) == Rational(5));
    for (int n = 4; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(critical_constant(n) < delta_rad(derive(n, 4.0 - n)));
    }
  }

  TEST_CASE("alpha star bound solves the quadratic") {
    CHECK(alpha_star_bound(5) == doctest::Approx((9 - 2 * std::sqrt(21.0)) / 3).epsilon(1e-14));
    CHECK(alpha_star_bound(4) == doctest::Approx((8 - 2 * std::sqrt(13.0)) / 3).epsilon(1e-14));
    CHECK(alpha_star_bound(9) == doctest::Approx((13 - 2 * std::sqrt(73.0)) / 3).epsilon(1e-14));
    CHECK(alpha_star_bound(9) < 0.0);
    CHECK(alpha_star_bound(5) == doctest::Approx(-0.05505).epsilon(1e-4));
    CHECK(alpha_star_bound(4) == doctest::Approx(0.26296).epsilon(1e-4));
    for (int n = 3; n <= 20; ++n) {
      CAPTURE(n);
      CHECK(alpha_star_bound(n) == doctest::Approx(quadratic_root(n)).epsilon(1e-12));
    }
  }

  TEST_CASE("classify examples") {
    const ConstantReport a = classify(derive(2, 0.0), full_sphere_spectrum(2, 8));
    CHECK_FALSE(a.positive);
    CHECK(a.M == 0.0);

    const ConstantReport b = classify(derive(3, 0.0), full_sphere_spectrum(3, 8));
    CHECK(b.positive);
    CHECK(*b.M == doctest::Approx(25.0 / 36.0).epsilon(1e-15));
    CHECK(b.certified_equality == Certificate::ByTheoremMainII);
    CHECK(b.regime == Regime::ModeK);

    const ConstantReport c = classify(derive(4, 0.0), full_sphere_spectrum(4, 8));
    CHECK(c.regime == Regime::Critical);
    CHECK(c.critical == 3.0);
    CHECK_FALSE(c.M.has_value());
    CHECK(c.certified_equality == Certificate::ByTheorem4mn);
  }

  TEST_CASE("exact kernel membership beyond n = 2") {
    // gamma(3, -1) = (-2)(4)/4 = -2 and 2 = 1*(1+1) is an eigenvalue.
    CHECK(exact::minus_gamma_in_sphere_spectrum(3, Rational(-1)));
    const ConstantReport r = classify(derive(3, -1.0), full_sphere_spectrum(3, 8));
    CHECK_FALSE(r.positive);
    CHECK(r.regime == Regime::Degenerate);
    CHECK(r.certified_equality == Certificate::ByTheoremMainI);
    CHECK_FALSE(exact::minus_gamma_in_sphere_spectrum(3, Rational(-1, 2)));
    CHECK_FALSE(exact::minus_gamma_in_sphere_spectrum(2, Rational(1, 2)));
  }

  TEST_CASE("off-sphere membership uses a tolerance") {
    // arc of length pi: eigenvalues k^2. gamma(2, a) = -(2-a)^2/4... with
    // n = 2, gamma = (a-2)(2-a)/4, so -gamma = 1 at a = 0.
    const Spectrum arc = arc_spectrum(M_PI, 8);
    const ConstantReport r = classify(derive(2, 0.0), arc);
    CHECK_FALSE(r.positive);
    CHECK(r.regime == Regime::Degenerate);
  }

  TEST_CASE("critical case off the sphere is uncertified") {
    const ConstantReport r = classify(derive(3, 1.0), cap_spectrum(3, M_PI / 2, 4));
    CHECK(r.regime == Regime::Critical);
    CHECK(r.certified_equality == Certificate::Uncertified);
  }

  TEST_CASE("property: gamma^2 = h delta_rad") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> alpha(-6.0, 10.0);
    for (int i = 0; i < 500; ++i) {
      const int n = 2 + i % 9;
      const Params p = derive(n, alpha(rng));
      CHECK(p.gamma * p.gamma == doctest::Approx(p.h * delta_rad(p)).epsilon(1e-12));
    }
    for (int n = 2; n <= 8; ++n) {
      for (int num = -40; num <= 60; ++num) {
        const Rational a(num, 7);
        const exact::Constants c = exact::derive(n, a);
        CHECK(c.gamma * c.gamma == c.h * c.delta_rad);
      }
    }
  }

  TEST_CASE("property: mode function nondecreasing past the threshold") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> alpha(-6.0, 10.0);
    for (int i = 0; i < 200; ++i) {
      const int n = 2 + i % 7;
      const Params p = derive(n, alpha(rng));
      if (!(p.h > 0.0)) continue;
      const double t0 = std::max({-p.gamma, p.gamma - 2.0 * p.h, 0.0});
      double prev = mode_value(p, t0);
      for (int j = 1; j <= 200; ++j) {
        const double v = mode_value(p, t0 + 0.25 * j);
        CHECK(v >= prev * (1 - 1e-14));
        prev = v;
      }
    }
  }

  TEST_CASE("property: best constant bounds every enumerated mode") {
    for (int n = 2; n <= 7; ++n) {
      for (int num = -20; num <= 40; ++num) {
        const Rational a(num, 4);
        if (a == Rational(4 - n)) continue;
        const Params p = derive(n, a);
        const Spectrum s = full_sphere_spectrum(n, 40);
        const ModeConstant mc = best_mode_constant(p, s);
        for (double lambda : s.values()) {
          if (p.h + lambda <= 0) continue;
          CHECK(mc.value <= mode_value(p, lambda) * (1 + 1e-14));
        }
        CHECK(mc.value <= delta_rad(p) * (1 + 1e-14));
        const exact::SphereModeConstant e = exact::best_mode_constant_sphere(n, a);
        CHECK(mc.value == doctest::Approx(to_double(e.value)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("property: n = 2 is always certified") {
    for (int num = -40; num <= 40; ++num) {
      const Rational a(num, 8);
      if (a == Rational(2)) continue;
      CAPTURE(num);
      const ConstantReport r = classify(derive(2, a), full_sphere_spectrum(2, 16));
      CHECK(r.certified());
    }
  }

  TEST_CASE("property: radial constant above alpha star") {
    for (int n = 3; n <= 8; ++n) {
      const double lo = alpha_star_bound(n);
      for (int j = 1; j < 40; ++j) {
        const double a = lo + (n - lo) * j / 40.0;
        if (std::abs(a - (4.0 - n)) < 1e-9) continue;
        const Params p = derive(n, a);
        const ConstantReport r = classify(p, full_sphere_spectrum(n, 16));
        CAPTURE(n);
        CAPTURE(a);
        CHECK(r.M == delta_rad(p));
        CHECK(r.regime == Regime::Radial);
        CHECK(r.certified());
      }
    }
  }

  TEST_CASE("uncertified strip") {
    // n = 5: [4-n, alpha*) = [-1, -0.055).
    const ConstantReport r = classify(derive(5, Rational(-1, 2)), full_sphere_spectrum(5, 16));
    CHECK(r.certified_equality == Certificate::Uncertified);
    CHECK(r.M.has_value());
    CHECK(*r.M <= r.delta_rad);
  }
}
