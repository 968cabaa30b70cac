#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "rellich/cylinder.hpp"
#include "rellich/errors.hpp"
#include "rellich/quad_verify.hpp"

using namespace rellich;

TEST_SUITE("quad_verify") {
  TEST_CASE("gauss-legendre is exact on polynomials") {
    CHECK(gauss_legendre([](double x) { return x * x * x * x; }, 0.0, 2.0, 1) ==
          doctest::Approx(32.0 / 5.0).epsilon(1e-15));
    CHECK(converged_integral([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK_THROWS_AS(gauss_legendre([](double) { return 1.0; }, 0.0, 1.0, 0), InvalidArgument);
  }

  TEST_CASE("non-convergence carries both estimates") {
    QuadratureOptions o;
    o.panels = 1;
    o.max_panels = 2;
    o.tolerance = 1e-16;
    try {
      converged_integral([](double x) { return std::sin(200.0 * x * x); }, 0.0, 3.0, o);
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      CHECK(e.coarse() != e.fine());
    }
  }

  TEST_CASE("quotient is dilation invariant") {
    for (const auto& e : default_corpus()) {
      const double base = weighted_integrals(e.function, e.alpha).ratio();
      for (double t : {0.25, 0.5, 2.0, 4.0}) {
        CAPTURE(e.function.name);
        CAPTURE(t);
        CHECK(weighted_integrals(e.function.dilated(t), e.alpha).ratio() ==
              doctest::Approx(base).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("corpus agrees across the transform") {
    for (const auto& e : default_corpus()) {
      CAPTURE(e.function.name);
      const EquivalenceReport r = xspace_equivalence_check(
          e.function, derive(e.function.n, e.alpha), full_sphere_spectrum(e.function.n, 4));
      CHECK(r.discrepancy < 1e-8);
    }
  }

  TEST_CASE("radial identity holds and its negative control fails") {
    for (int n : {3, 4, 5}) {
      for (double alpha : {-1.0, 0.0, 1.5}) {
        const XTestFunction u = sphere_mode_function(n, 0, RadialProfile::bump(0.5, 2.0));
        const RadialIdentity r = radial_identity_check(u, alpha);
        CAPTURE(n);
        CAPTURE(alpha);
        CHECK(r.defect < 1e-10);
        CHECK(r.cross_relative < 1e-10);
        CHECK(r.remainder > 0.0);
        // The sign-flipped exponent only differs when n + alpha != 2.
        if (n + alpha != 2.0) {
          const RadialIdentity bad = radial_identity_check(u, alpha, (2.0 - n - alpha) / 2.0);
          CHECK(bad.defect > 1e-3);
        }
      }
    }
    const XTestFunction nonradial = sphere_mode_function(3, 1, RadialProfile::bump(0.5, 2.0));
    CHECK_THROWS_AS(radial_identity_check(nonradial, 0.0), InvalidArgument);
  }

  TEST_CASE("radial quotients sit above delta_rad") {
    const RadialProfile profiles[] = {RadialProfile::bump(0.5, 2.0), RadialProfile::bump(0.1, 9.0),
                                      RadialProfile::polynomial(1.0, 3.0, 4),
                                      RadialProfile::log_bump(0.3, 0.2, 2.0)};
    for (const RadialProfile& pr : profiles) {
      const double q = weighted_integrals(sphere_mode_function(3, 0, pr), 0.0).ratio();
      CHECK(q >= 2.25);
    }
  }

  TEST_CASE("witness below delta_rad in dimension three") {
    const WitnessResult w = symmetry_breaking_witness(3, 0.0, 0.01);
    REQUIRE(w.found());
    CHECK(w.witness->quotient < w.delta_rad);
    CHECK(w.witness->quotient <= 25.0 / 36.0 + 0.01);
    CHECK(w.witness->quotient >= 25.0 / 36.0);
    CHECK(w.witness->mode >= 1);
    CHECK(w.target_constant == doctest::Approx(25.0 / 36.0));
  }

  TEST_CASE("corpus file matches the built-in corpus") {
    std::ifstream in(RELLICH_DATA_DIR "/corpus_v1.txt");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == default_corpus_text());
    CHECK(load_corpus(RELLICH_DATA_DIR "/corpus_v1.txt").size() == 12);
  }

  TEST_CASE("corpus parse errors") {
    auto parse = [](const std::string& s) {
      std::istringstream in(s);
      return parse_corpus(in);
    };
    CHECK(parse("[function]\nname=a\nn=3\nalpha=0\nmode=0\nkind=bump\nr_min=1\nr_max=2\n").size() == 1);
    CHECK_THROWS_AS(parse("[function]\nname=a\nn=3\nalpha=0\nmode=0\nkind=bump\nr_min=1\n"),
                    InvalidArgument);
    CHECK_THROWS_AS(parse("[function]\nname=a\nn=3\nalpha=0\nmode=0\nkind=cone\n"), InvalidArgument);
    CHECK_THROWS_AS(parse("[function]\nname=a\nn=x\nalpha=0\nmode=0\nkind=bump\nr_min=1\nr_max=2\n"),
                    InvalidArgument);
    CHECK_THROWS_AS(parse("[function]\njunk line\n"), InvalidArgument);
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.txt"), InvalidArgument);
  }
}
