#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rellich {

/// Symmetric band matrix stored by its lower diagonals:
/// diag(d)[j] = A(j + d, j) for d = 0..bandwidth.
class BandedSymmetric {
 public:
  BandedSymmetric(std::size_t size, std::size_t bandwidth);

  std::size_t size() const noexcept { return size_; }
  std::size_t bandwidth() const noexcept { return bandwidth_; }

  /// Entry (i, j) of the lower triangle, |i - j| <= bandwidth.
  double& lower(std::size_t i, std::size_t j);
  double lower(std::size_t i, std::size_t j) const;
  double operator()(std::size_t i, std::size_t j) const;

  /// this + scale * other (same size; bandwidth is the larger of the two).
  BandedSymmetric axpy(double scale, const BandedSymmetric& other) const;

  void multiply(std::span<const double> x, std::span<double> y) const;
  double quadratic_form(std::span<const double> x) const;
  /// Max absolute row sum.
  double norm_inf() const;

 private:
  std::size_t size_;
  std::size_t bandwidth_;
  std::vector<std::vector<double>> diags_;
};

/// A = L D L^T without pivoting, L unit lower banded. Valid for definite
/// matrices and, away from exact zero pivots, for counting inertia of
/// indefinite ones (Sylvester's law).
class BandedLDLT {
 public:
  explicit BandedLDLT(const BandedSymmetric& a);

  /// Number of negative pivots = number of negative eigenvalues of A.
  std::size_t negative_count() const noexcept { return negatives_; }
  bool positive_definite() const noexcept { return negatives_ == 0 && !zero_pivot_; }

  void solve_in_place(std::span<double> b) const;

 private:
  std::size_t size_;
  std::size_t bandwidth_;
  std::vector<std::vector<double>> l_;  // l_[d][j] = L(j + d, j), d >= 1
  std::vector<double> d_;
  std::size_t negatives_ = 0;
  bool zero_pivot_ = false;
};

}  // namespace rellich
