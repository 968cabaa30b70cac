#include "rellich/banded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rellich/errors.hpp"

namespace rellich {

BandedSymmetric::BandedSymmetric(std::size_t size, std::size_t bandwidth)
    : size_(size), bandwidth_(bandwidth), diags_(bandwidth + 1) {
  for (std::size_t d = 0; d <= bandwidth; ++d) diags_[d].assign(size > d ? size - d : 0, 0.0);
}

double& BandedSymmetric::lower(std::size_t i, std::size_t j) {
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth_ || i >= size_) throw InvalidArgument("band index out of range");
  return diags_[i - j][j];
}

double BandedSymmetric::lower(std::size_t i, std::size_t j) const {
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth_ || i >= size_) throw InvalidArgument("band index out of range");
  return diags_[i - j][j];
}

double BandedSymmetric::operator()(std::size_t i, std::size_t j) const {
  const std::size_t d = i > j ? i - j : j - i;
  if (d > bandwidth_) return 0.0;
  return diags_[d][std::min(i, j)];
}

BandedSymmetric BandedSymmetric::axpy(double scale, const BandedSymmetric& other) const {
  if (other.size_ != size_) throw InvalidArgument("axpy: size mismatch");
  BandedSymmetric out(size_, std::max(bandwidth_, other.bandwidth_));
  for (std::size_t d = 0; d <= bandwidth_; ++d) out.diags_[d] = diags_[d];
  for (std::size_t d = 0; d <= other.bandwidth_; ++d) {
    for (std::size_t j = 0; j < other.diags_[d].size(); ++j) out.diags_[d][j] += scale * other.diags_[d][j];
  }
  return out;
}

void BandedSymmetric::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size_ || y.size() != size_) throw InvalidArgument("multiply: size mismatch");
  for (std::size_t i = 0; i < size_; ++i) y[i] = diags_[0][i] * x[i];
  for (std::size_t d = 1; d <= bandwidth_; ++d) {
    const auto& diag = diags_[d];
    for (std::size_t j = 0; j < diag.size(); ++j) {
      y[j + d] += diag[j] * x[j];
      y[j] += diag[j] * x[j + d];
    }
  }
}

double BandedSymmetric::quadratic_form(std::span<const double> x) const {
  std::vector<double> y(size_);
  multiply(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < size_; ++i) s += x[i] * y[i];
  return s;
}

double BandedSymmetric::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    double row = 0.0;
    const std::size_t lo = i > bandwidth_ ? i - bandwidth_ : 0;
    const std::size_t hi = std::min(size_ - 1, i + bandwidth_);
    for (std::size_t j = lo; j <= hi; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

BandedLDLT::BandedLDLT(const BandedSymmetric& a)
    : size_(a.size()), bandwidth_(a.bandwidth()), l_(a.bandwidth() + 1), d_(a.size()) {
  const std::size_t p = bandwidth_;
  for (std::size_t d = 1; d <= p; ++d) l_[d].assign(size_ > d ? size_ - d : 0, 0.0);
  const double tiny = std::numeric_limits<double>::min();

  auto L = [this](std::size_t i, std::size_t j) -> double {
    return i == j ? 1.0 : l_[i - j][j];
  };

  for (std::size_t j = 0; j < size_; ++j) {
    const std::size_t k0 = j > p ? j - p : 0;
    double dj = a(j, j);
    for (std::size_t k = k0; k < j; ++k) {
      const double ljk = L(j, k);
      dj -= ljk * ljk * d_[k];
    }
    if (dj == 0.0) {
      zero_pivot_ = true;
      dj = -tiny;
    }
    d_[j] = dj;
    if (dj < 0.0) ++negatives_;

    const std::size_t i_end = std::min(size_ - 1, j + p);
    for (std::size_t i = j + 1; i <= i_end; ++i) {
      double s = a(i, j);
      const std::size_t kk = i > p ? i - p : 0;
      for (std::size_t k = std::max(kk, k0); k < j; ++k) s -= L(i, k) * L(j, k) * d_[k];
      l_[i - j][j] = s / dj;
    }
  }
}

void BandedLDLT::solve_in_place(std::span<double> b) const {
  if (b.size() != size_) throw InvalidArgument("solve: size mismatch");
  const std::size_t p = bandwidth_;
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t k0 = i > p ? i - p : 0;
    double s = b[i];
    for (std::size_t k = k0; k < i; ++k) s -= l_[i - k][k] * b[k];
    b[i] = s;
  }
  for (std::size_t i = 0; i < size_; ++i) b[i] /= d_[i];
  for (std::size_t ii = size_; ii-- > 0;) {
    const std::size_t k_end = std::min(size_ - 1, ii + p);
    double s = b[ii];
    for (std::size_t k = ii + 1; k <= k_end; ++k) s -= l_[k - ii][ii] * b[k];
    b[ii] = s;
  }
}

}  // namespace rellich
