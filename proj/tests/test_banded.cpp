#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "rellich/banded.hpp"

using rellich::BandedLDLT;
using rellich::BandedSymmetric;

namespace {

BandedSymmetric random_band(std::size_t n, std::size_t bw, double shift, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BandedSymmetric a(n, bw);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < std::min(n, j + bw + 1); ++i) a.lower(i, j) = u(rng);
    a.lower(j, j) += shift;
  }
  return a;
}

Eigen::MatrixXd dense(const BandedSymmetric& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

}  // namespace

TEST_SUITE("banded") {
  TEST_CASE("solve agrees with a dense factorization") {
    std::mt19937_64 rng(3);
    for (std::size_t bw : {1u, 2u, 4u}) {
      const BandedSymmetric a = random_band(60, bw, 10.0, rng);
      const Eigen::MatrixXd m = dense(a);
      Eigen::VectorXd b = Eigen::VectorXd::Random(60);
      std::vector<double> x(b.data(), b.data() + 60);
      BandedLDLT f(a);
      CHECK(f.positive_definite());
      f.solve_in_place(x);
      const Eigen::VectorXd ref = m.ldlt().solve(b);
      for (int i = 0; i < 60; ++i) CHECK(x[static_cast<std::size_t>(i)] == doctest::Approx(ref(i)).epsilon(1e-12));
    }
  }

  TEST_CASE("inertia matches the dense spectrum") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      const BandedSymmetric a = random_band(40, 2, 0.0, rng);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(a));
      std::size_t neg = 0;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) neg += es.eigenvalues()(i) < 0 ? 1 : 0;
      CHECK(BandedLDLT(a).negative_count() == neg);
    }
  }

  TEST_CASE("products and norms") {
    std::mt19937_64 rng(9);
    const BandedSymmetric a = random_band(20, 2, 0.0, rng);
    const BandedSymmetric b = random_band(20, 1, 0.0, rng);
    const Eigen::MatrixXd m = dense(a) + 0.5 * dense(b);
    const BandedSymmetric c = a.axpy(0.5, b);
    CHECK(c.bandwidth() == 2);
    std::vector<double> x(20), y(20);
    for (std::size_t i = 0; i < 20; ++i) x[i] = std::sin(static_cast<double>(i));
    c.multiply(x, y);
    const Eigen::VectorXd ex = Eigen::Map<Eigen::VectorXd>(x.data(), 20);
    const Eigen::VectorXd ey = m * ex;
    for (int i = 0; i < 20; ++i) CHECK(y[static_cast<std::size_t>(i)] == doctest::Approx(ey(i)).epsilon(1e-13));
    CHECK(c.quadratic_form(x) == doctest::Approx(ex.dot(ey)).epsilon(1e-13));
    CHECK(c.norm_inf() == doctest::Approx(m.cwiseAbs().rowwise().sum().maxCoeff()).epsilon(1e-14));
  }
}
