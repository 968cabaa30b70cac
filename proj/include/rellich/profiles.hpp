#pragma once

#include <string>

namespace rellich {

/// exp(-1/(1-x^2)) on (-1, 1), zero outside, with its first two
/// derivatives. C-infinity at the support boundary.
struct BumpValue {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

BumpValue standard_bump(double x);

/// A radial profile U(r) evaluated in log-scaled form. With t = log r the
/// true values are
///
///   U = e^{log_scale} u,  r U' = e^{log_scale} ru,  r^2 U'' = e^{log_scale} r2u
///
/// so that the power prefactors of the log-bump family never overflow even
/// when the support spans hundreds of units in log r.
struct ProfileSample {
  double log_scale = 0.0;
  double u = 0.0;
  double ru = 0.0;
  double r2u = 0.0;
};

/// Smooth, compactly supported profile on (0, inf).
///
///  - Bump:       b((2r - r_min - r_max)/(r_max - r_min))
///  - LogBump:    r^power b((log r - center)/half_width)
///  - Polynomial: ((r - r_min)(r_max - r))^order, order >= 3 so that the
///                profile and two derivatives vanish at the ends
///
/// `dilation` t evaluates U(t r), i.e. the profile of u(t x).
struct RadialProfile {
  enum class Kind { Bump, LogBump, Polynomial };

  Kind kind = Kind::Bump;
  double r_min = 0.5;
  double r_max = 2.0;
  double power = 0.0;
  double center = 0.0;
  double half_width = 1.0;
  int order = 4;
  double dilation = 1.0;

  static RadialProfile bump(double r_min, double r_max);
  static RadialProfile log_bump(double power, double center, double half_width);
  static RadialProfile polynomial(double r_min, double r_max, int order);

  /// Support in log r, after dilation.
  double log_min() const;
  double log_max() const;

  ProfileSample at_log(double t) const;

  RadialProfile dilated(double t) const;
  void validate() const;
};

/// u(x) = U(|x|) phi(x/|x|) with phi an eigenfunction of eigenvalue lambda
/// (phi = 1, lambda = 0 for radial functions) normalized in L^2(Sigma).
struct XTestFunction {
  RadialProfile profile;
  int n = 3;
  double lambda = 0.0;
  int mode = 0;  ///< spherical-harmonic degree when the domain is the sphere
  std::string name;

  bool radial() const { return lambda == 0.0; }
  XTestFunction dilated(double t) const;
};

/// Mode-k function on S^{n-1} (lambda = k(n-2+k)).
XTestFunction sphere_mode_function(int n, int k, RadialProfile profile,
                                   std::string name = {});

}  // namespace rellich
