#include "rellich/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {
namespace {

void check_dimension(int n) {
  if (n < 2) throw InvalidArgument("dimension n must be >= 2, got " + std::to_string(n));
}

Params fill(int n, const Rational& alpha) {
  const exact::Constants c = exact::derive(n, alpha);
  Params p;
  p.n = n;
  p.alpha_exact = alpha;
  p.alpha = to_double(alpha);
  p.gamma = to_double(c.gamma);
  p.h = to_double(c.h);
  p.A = to_double(alpha - 2);
  p.B = p.gamma;
  p.C = p.h;
  return p;
}

}  // namespace

bool Params::critical() const { return alpha_exact == Rational(4 - n); }

Params derive(int n, double alpha) {
  check_dimension(n);
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  return fill(n, to_rational(alpha));
}

Params derive(int n, const Rational& alpha) {
  check_dimension(n);
  return fill(n, alpha);
}

double delta_rad(const Params& p) {
  const double half = (p.n - p.alpha) / 2.0;
  return half * half;
}

double mode_value(const Params& p, double lambda) {
  const double den = p.h + lambda;
  if (!(den > 0.0)) {
    throw DegenerateDenominator("h + lambda = " + std::to_string(den) +
                                " <= 0; alpha = 4-n with lambda = 0 has no mode constant");
  }
  const double num = p.gamma + lambda;
  return num * num / den;
}

ModeConstant best_mode_constant(const Params& p, const Spectrum& spectrum,
                                double membership_tol) {
  if (p.critical()) {
    throw DegenerateDenominator("alpha = 4-n: M is undefined, use critical_constant");
  }
  const double threshold = std::max({-p.gamma, p.gamma - 2.0 * p.h, 0.0});
  const bool sphere = spectrum.domain().is_full_sphere();

  ModeConstant best;
  if (sphere && exact::minus_gamma_in_sphere_spectrum(p.n, p.alpha_exact)) {
    best.kernel_hit = true;
    best.value = 0.0;
    best.lambda = -p.gamma;
  }

  std::size_t want = std::max<std::size_t>(spectrum.values().size(), 8);
  std::size_t i = 0;
  bool past_threshold = false;
  bool have = false;
  for (;;) {
    const std::vector<double> lambdas = spectrum.first(want);
    for (; i < lambdas.size(); ++i) {
      const double lambda = lambdas[i];
      if (!sphere && std::abs(lambda + p.gamma) <= membership_tol) {
        best.kernel_hit = true;
        best.value = 0.0;
        best.lambda = lambda;
        best.index = i;
      }
      const double v = lambda == 0.0 ? delta_rad(p) : mode_value(p, lambda);
      if (!best.kernel_hit && (!have || v < best.value)) {
        best.value = v;
        best.lambda = lambda;
        best.index = i;
        have = true;
      }
      if (past_threshold) {
        best.scanned = i + 1;
        return best;
      }
      if (lambda >= threshold) past_threshold = true;
    }
    if (lambdas.size() < want || !spectrum.extendable()) {
      // Finite spectrum exhausted.
      best.scanned = lambdas.size();
      if (!have && !best.kernel_hit) throw InvalidArgument("empty spectrum");
      return best;
    }
    want *= 2;
  }
}

double critical_constant(int n) {
  check_dimension(n);
  const double a = (n - 2.0) * (n - 2.0);
  const double b = n - 1.0;
  return std::min(a, b);
}

double alpha_star_bound(int n) {
  if (n < 3) throw InvalidArgument("alpha_star_bound needs n >= 3, got " + std::to_string(n));
  const double nn = n;
  return (nn + 4.0 - 2.0 * std::sqrt(nn * nn - nn + 1.0)) / 3.0;
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::ByTheoremMainI: return "ByTheoremMainI";
    case Certificate::ByTheoremMainII: return "ByTheoremMainII";
    case Certificate::ByTheoremMainRN_i: return "ByTheoremMainRN_i";
    case Certificate::ByTheoremMainRN_ii: return "ByTheoremMainRN_ii";
    case Certificate::ByTheoremMainRN_iii: return "ByTheoremMainRN_iii";
    case Certificate::ByTheorem4mn: return "ByTheorem4mn";
    case Certificate::Uncertified: return "Uncertified";
  }
  return "?";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Radial: return "Radial";
    case Regime::ModeK: return "ModeK";
    case Regime::Critical: return "Critical";
    case Regime::Degenerate: return "Degenerate";
  }
  return "?";
}

ConstantReport classify(const Params& p, const Spectrum& spectrum, double membership_tol) {
  ConstantReport report;
  report.delta_rad = delta_rad(p);
  const bool sphere = spectrum.domain().is_full_sphere();

  if (p.critical()) {
    report.regime = Regime::Critical;
    if (sphere) {
      report.critical = critical_constant(p.n);
      report.positive = *report.critical > 0.0;
      report.certified_equality = Certificate::ByTheorem4mn;
    } else {
      // No closed form off the full sphere; h = gamma = 0 leaves the
      // cylinder quotient coercive iff lambda_Sigma > 0.
      report.positive = spectrum.lambda_min() > 0.0;
      report.certified_equality = Certificate::Uncertified;
    }
    return report;
  }

  const ModeConstant mc = best_mode_constant(p, spectrum, membership_tol);
  report.argmin_lambda = mc.lambda;
  if (mc.kernel_hit) {
    report.M = 0.0;
    report.positive = false;
    report.regime = Regime::Degenerate;
    report.certified_equality =
        sphere && p.n == 2 ? Certificate::ByTheoremMainRN_i : Certificate::ByTheoremMainI;
    return report;
  }

  report.M = mc.value;
  report.positive = true;
  report.regime = mc.lambda == 0.0 ? Regime::Radial : Regime::ModeK;

  bool main_ii = false;
  if (sphere) {
    const exact::Constants c = exact::derive(p.n, p.alpha_exact);
    main_ii = c.gamma - 2 * c.h <= 0;
  } else {
    main_ii = p.gamma - 2.0 * p.h <= spectrum.lambda_min();
  }

  if (main_ii) {
    report.certified_equality = Certificate::ByTheoremMainII;
  } else if (sphere) {
    const Rational lower(4 - p.n);
    if (p.n == 2) {
      report.certified_equality = Certificate::ByTheoremMainRN_i;
    } else if (p.alpha_exact < lower || p.alpha_exact >= Rational(p.n)) {
      report.certified_equality = Certificate::ByTheoremMainRN_ii;
    } else if (p.alpha >= alpha_star_bound(p.n)) {
      report.certified_equality = Certificate::ByTheoremMainRN_iii;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace exact {

Constants derive(int n, const Rational& alpha) {
  check_dimension(n);
  const Rational a = Rational(n - 4) + alpha;
  const Rational b = Rational(n) - alpha;
  Constants c;
  c.gamma = a * b / 4;
  c.h = a * a / 4;
  c.delta_rad = b * b / 4;
  return c;
}

Rational mode_value(int n, const Rational& alpha, const Rational& lambda) {
  const Constants c = derive(n, alpha);
  const Rational den = c.h + lambda;
  if (den <= 0) throw DegenerateDenominator("h + lambda <= 0");
  const Rational num = c.gamma + lambda;
  return num * num / den;
}

bool minus_gamma_in_sphere_spectrum(int n, const Rational& alpha) {
  const Rational target = -derive(n, alpha).gamma;
  if (target < 0 || boost::multiprecision::denominator(target) != 1) return false;
  // k^2 + (n-2)k - target = 0 must have a nonnegative integer root.
  const BigInt g = boost::multiprecision::numerator(target);
  const BigInt m = n - 2;
  const BigInt disc = m * m + 4 * g;
  const BigInt s = boost::multiprecision::sqrt(disc);
  if (s * s != disc) return false;
  const BigInt twice_k = s - m;
  return twice_k >= 0 && (twice_k % 2) == 0;
}

SphereModeConstant best_mode_constant_sphere(int n, const Rational& alpha) {
  const Constants c = derive(n, alpha);
  if (c.h == 0) throw DegenerateDenominator("alpha = 4-n: M is undefined");

  SphereModeConstant best;
  if (minus_gamma_in_sphere_spectrum(n, alpha)) {
    best.value = 0;
    const BigInt m = n - 2;
    const BigInt g = boost::multiprecision::numerator(Rational(-c.gamma));
    const BigInt disc = m * m + 4 * g;
    best.k = (boost::multiprecision::sqrt(disc) - m) / 2;
    return best;
  }

  Rational threshold = -c.gamma;
  if (c.gamma - 2 * c.h > threshold) threshold = c.gamma - 2 * c.h;
  if (threshold < 0) threshold = 0;

  bool past = false;
  bool have = false;
  for (BigInt k = 0;; ++k) {
    const Rational lambda(k * (k + n - 2));
    const Rational v = mode_value(n, alpha, lambda);
    if (!have || v < best.value) {
      best.value = v;
      best.k = k;
      have = true;
    }
    if (past) return best;
    if (lambda >= threshold) past = true;
  }
}

Rational critical_constant(int n) {
  check_dimension(n);
  const Rational a((n - 2) * (n - 2));
  const Rational b(n - 1);
  return a < b ? a : b;
}

}  // namespace exact

}  // namespace rellich
