#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "rellich/rational.hpp"
#include "rellich/spectra.hpp"

namespace rellich {

/// The pair (n, alpha) with every constant derived from it.
///
///   gamma = (n-4+alpha)(n-alpha)/4      h = ((n-4+alpha)/2)^2
///   A = alpha-2                         B = gamma,  C = h
///
/// When the exponent is known exactly (parsed from text, or the exact value
/// of a double) it is kept so that knife-edge tests can be done in rational
/// arithmetic.
struct Params {
  int n = 0;
  double alpha = 0.0;
  double gamma = 0.0;
  double h = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  Rational alpha_exact;

  /// alpha == 4 - n exactly; then gamma = h = 0.
  bool critical() const;
};

Params derive(int n, double alpha);
Params derive(int n, const Rational& alpha);

/// ((n-alpha)/2)^2, the best constant among radial functions.
double delta_rad(const Params& p);

/// (gamma+lambda)^2 / (h+lambda). Throws DegenerateDenominator when
/// h + lambda <= 0.
double mode_value(const Params& p, double lambda);

/// Smallest value of the mode function over a spectrum.
struct ModeConstant {
  double value = 0.0;
  double lambda = 0.0;       ///< eigenvalue attaining the minimum
  std::size_t index = 0;     ///< its position in the spectrum
  std::size_t scanned = 0;   ///< eigenvalues examined
  bool kernel_hit = false;   ///< -gamma is an eigenvalue (value is 0)
};

/// min over lambda in the spectrum of mode_value. The scan stops one
/// eigenvalue past max(-gamma, gamma-2h, 0): the mode function is
/// nondecreasing beyond that point since its derivative carries the factor
/// (gamma+t)(t+2h-gamma).
ModeConstant best_mode_constant(const Params& p, const Spectrum& spectrum,
                                double membership_tol = 1e-9);

/// min{(n-2)^2, n-1}: the best constant at alpha = 4-n on R^n.
double critical_constant(int n);

/// Smaller root of 3a^2 - 2(n+4)a + (4n+4-n^2), i.e.
/// (n + 4 - 2 sqrt(n^2-n+1)) / 3. Requires n >= 3.
double alpha_star_bound(int n);

/// Which result certifies delta = M (or delta = critical constant).
enum class Certificate {
  ByTheoremMainI,      ///< -gamma is an eigenvalue, delta = M = 0
  ByTheoremMainII,     ///< gamma - 2h <= lambda_Sigma
  ByTheoremMainRN_i,   ///< n = 2, full sphere
  ByTheoremMainRN_ii,  ///< alpha outside [4-n, alpha*), full sphere
  ByTheoremMainRN_iii, ///< alpha* < alpha < n, delta = delta_rad
  ByTheorem4mn,        ///< alpha = 4-n, full sphere
  Uncertified,
};

enum class Regime { Radial, ModeK, Critical, Degenerate };

std::string_view to_string(Certificate c);
std::string_view to_string(Regime r);

struct ConstantReport {
  double delta_rad = 0.0;
  std::optional<double> M;
  std::optional<double> critical;
  std::optional<double> argmin_lambda;
  bool positive = false;
  Certificate certified_equality = Certificate::Uncertified;
  Regime regime = Regime::ModeK;

  bool certified() const { return certified_equality != Certificate::Uncertified; }
};

/// Labels (n, alpha, Sigma). Points the theorems do not cover are reported
/// Uncertified with M as an upper bound; nothing is guessed.
ConstantReport classify(const Params& p, const Spectrum& spectrum,
                        double membership_tol = 1e-9);

/// Exact-arithmetic counterparts, for rational alpha on the full sphere.
namespace exact {

struct Constants {
  Rational gamma;
  Rational h;
  Rational delta_rad;
};

Constants derive(int n, const Rational& alpha);

/// (gamma+lambda)^2 / (h+lambda) with lambda rational.
Rational mode_value(int n, const Rational& alpha, const Rational& lambda);

/// Whether -gamma = k(n-2+k) for some integer k >= 0.
bool minus_gamma_in_sphere_spectrum(int n, const Rational& alpha);

struct SphereModeConstant {
  Rational value;
  BigInt k;  ///< spherical-harmonic degree attaining the minimum
};

/// M_{n,alpha}(S^{n-1}) in rational arithmetic. alpha != 4-n.
SphereModeConstant best_mode_constant_sphere(int n, const Rational& alpha);

Rational critical_constant(int n);

}  // namespace exact

}  // namespace rellich
