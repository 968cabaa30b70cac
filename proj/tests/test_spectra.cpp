#include <doctest.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <fstream>

#include "rellich/errors.hpp"
#include "rellich/spectra.hpp"

using namespace rellich;

namespace {

// 2F1(-nu, nu + n - 2; (n-1)/2; z) by its power series, |z| < 1.
double hyper(double nu, int n, double z) {
  const double a = -nu, b = nu + n - 2.0, c = (n - 1) / 2.0;
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 4000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Lowest zonal Dirichlet eigenvalue nu(nu + n - 2) of the cap of radius theta0.
double zonal_cap_eigenvalue(int n, double theta0) {
  const double z = (1.0 - std::cos(theta0)) / 2.0;
  auto f = [&](double nu) { return hyper(nu, n, z); };
  double lo = 0.0, hi = 0.01;
  while (f(hi) > 0.0) {
    lo = hi;
    hi += 0.01;
  }
  auto tol = [](double x, double y) { return std::abs(x - y) < 1e-15 * std::max(1.0, x); };
  const auto r = boost::math::tools::bisect(f, lo, hi, tol);
  const double nu = 0.5 * (r.first + r.second);
  return nu * (nu + n - 2.0);
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("full sphere") {
    const Spectrum s = full_sphere_spectrum(3, 4);
    CHECK(s.values() == std::vector<double>{0, 2, 6, 12});
    CHECK(full_sphere_spectrum(4, 3).values() == std::vector<double>{0, 3, 8});
    CHECK(full_sphere_spectrum(2, 3).values() == std::vector<double>{0, 1, 4});
    CHECK(s.first(6) == std::vector<double>{0, 2, 6, 12, 20, 30});
    CHECK(s.lambda_min() == 0.0);
  }

  TEST_CASE("arcs") {
    const Spectrum s = arc_spectrum(M_PI, 3);
    CHECK(s.values()[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.values()[1] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(s.values()[2] == doctest::Approx(9.0).epsilon(1e-15));
    const Spectrum q = arc_spectrum(M_PI / 2, 2);
    CHECK(q.values()[0] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(q.values()[1] == doctest::Approx(16.0).epsilon(1e-15));
    CHECK_THROWS_AS(arc_spectrum(0.0, 3), InvalidArgument);
    CHECK_THROWS_AS(arc_spectrum(7.0, 3), InvalidArgument);
  }

  TEST_CASE("hemisphere cap matches spherical harmonics odd about the equator") {
    // n = 3: k(k+1) with k - m odd, one entry per azimuthal order.
    const Spectrum s = cap_spectrum(3, M_PI / 2, 7);
    const double expect[] = {2, 6, 12, 12, 20, 20, 30};
    for (int i = 0; i < 7; ++i) CHECK(s.values()[i] == doctest::Approx(expect[i]).epsilon(1e-5));
    CHECK(s.meta().error_estimate < 1e-5);
    for (int n = 3; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(cap_spectrum(n, M_PI / 2, 1).lambda_min() == doctest::Approx(n - 1.0).epsilon(1e-5));
    }
  }

  TEST_CASE("cap ground state against the hypergeometric zero") {
    for (int n : {3, 4, 5}) {
      for (double theta : {M_PI / 6, M_PI / 3, 2 * M_PI / 3}) {
        CAPTURE(n);
        CAPTURE(theta);
        const double oracle = zonal_cap_eigenvalue(n, theta);
        CHECK(cap_spectrum(n, theta, 1).lambda_min() == doctest::Approx(oracle).epsilon(1e-5));
      }
    }
  }

  TEST_CASE("cap eigenvalues decrease as the cap grows") {
    double prev = INFINITY;
    for (double theta : {0.3, 0.8, 1.4, 2.0, 2.6}) {
      const double v = cap_spectrum(4, theta, 1).lambda_min();
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("finite differences converge at second order") {
    const double e1 = cap_order_eigenvalues(3, M_PI / 2, 0, 128, 1)[0] - 2.0;
    const double e2 = cap_order_eigenvalues(3, M_PI / 2, 0, 256, 1)[0] - 2.0;
    const double e3 = cap_order_eigenvalues(3, M_PI / 2, 0, 512, 1)[0] - 2.0;
    CHECK(std::abs(e1 / e2) == doctest::Approx(4.0).epsilon(0.05));
    CHECK(std::abs(e2 / e3) == doctest::Approx(4.0).epsilon(0.05));
  }

  TEST_CASE("domain parsing") {
    CHECK(parse_domain("sphere").is_full_sphere());
    const DomainSpec c = parse_domain("cap:pi/2");
    CHECK(c.kind == DomainSpec::Kind::Cap);
    CHECK(c.angle == doctest::Approx(M_PI / 2));
    CHECK(parse_domain("cap:0.75pi").angle == doctest::Approx(0.75 * M_PI));
    CHECK(parse_domain("arc:1.5").angle == 1.5);
    for (const char* bad : {"", "torus", "cap:", "cap:4", "cap:-1", "arc:x", "cap:pi"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_domain(bad), InvalidArgument);
    }
  }

  TEST_CASE("explicit eigenvalue files") {
    const std::string path = "rellich_test_eigs.txt";
    {
      std::ofstream out(path);
      out << "# values\n2, 6\n12 # tail\n";
    }
    const Spectrum s = make_spectrum(3, parse_domain("file:" + path), 8);
    CHECK(s.values() == std::vector<double>{2, 6, 12});
    CHECK_FALSE(s.extendable());
    {
      std::ofstream out(path);
      out << "6 2\n";
    }
    CHECK_THROWS_AS(make_spectrum(3, parse_domain("file:" + path), 8), InvalidArgument);
    {
      std::ofstream out(path);
      out << "-1 2\n";
    }
    CHECK_THROWS_AS(make_spectrum(3, parse_domain("file:" + path), 8), InvalidArgument);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_eigenvalue_file("/nonexistent/eigs.txt"), InvalidArgument);
  }

  TEST_CASE("argument errors") {
    CHECK_THROWS_AS(full_sphere_spectrum(1, 3), InvalidArgument);
    CHECK_THROWS_AS(cap_spectrum(2, 1.0, 3), InvalidArgument);
    CHECK_THROWS_AS(cap_spectrum(3, 0.0, 3), InvalidArgument);
    CHECK_THROWS_AS(make_spectrum(3, DomainSpec::arc(1.0), 3), InvalidArgument);
  }
}
