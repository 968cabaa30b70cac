#include "rellich/profiles.hpp"

#include <cmath>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {

BumpValue standard_bump(double x) {
  BumpValue out;
  if (!(std::abs(x) < 1.0)) return out;
  const double q = 1.0 - x * x;
  const double b = std::exp(-1.0 / q);
  const double q2 = q * q;
  out.value = b;
  out.d1 = b * (-2.0 * x / q2);
  out.d2 = b * (6.0 * x * x * x * x - 2.0) / (q2 * q2);
  return out;
}

RadialProfile RadialProfile::bump(double r_min, double r_max) {
  RadialProfile p;
  p.kind = Kind::Bump;
  p.r_min = r_min;
  p.r_max = r_max;
  p.validate();
  return p;
}

RadialProfile RadialProfile::log_bump(double power, double center, double half_width) {
  RadialProfile p;
  p.kind = Kind::LogBump;
  p.power = power;
  p.center = center;
  p.half_width = half_width;
  p.validate();
  return p;
}

RadialProfile RadialProfile::polynomial(double r_min, double r_max, int order) {
  RadialProfile p;
  p.kind = Kind::Polynomial;
  p.r_min = r_min;
  p.r_max = r_max;
  p.order = order;
  p.validate();
  return p;
}

void RadialProfile::validate() const {
  if (!(dilation > 0.0) || !std::isfinite(dilation)) throw InvalidArgument("dilation must be positive");
  switch (kind) {
    case Kind::Bump:
    case Kind::Polynomial:
      if (!(r_min > 0.0)) throw InvalidArgument("profile must vanish near the origin (r_min > 0)");
      if (!(r_max > r_min) || !std::isfinite(r_max)) {
        throw InvalidArgument("profile must vanish near infinity (finite r_max > r_min)");
      }
      if (kind == Kind::Polynomial && order < 3) {
        throw InvalidArgument("polynomial profile needs order >= 3 to be C^2 at its ends");
      }
      break;
    case Kind::LogBump:
      if (!(half_width > 0.0) || !std::isfinite(half_width) || !std::isfinite(center) ||
          !std::isfinite(power)) {
        throw InvalidArgument("log-bump needs finite center/power and positive half_width");
      }
      break;
  }
}

double RadialProfile::log_min() const {
  const double shift = std::log(dilation);
  if (kind == Kind::LogBump) return center - half_width - shift;
  return std::log(r_min) - shift;
}

double RadialProfile::log_max() const {
  const double shift = std::log(dilation);
  if (kind == Kind::LogBump) return center + half_width - shift;
  return std::log(r_max) - shift;
}

ProfileSample RadialProfile::at_log(double t) const {
  // U_dilated(r) = U(dilation r): the scaled triple (U, rU', r^2U'') is
  // simply evaluated at the shifted log-radius.
  const double ts = t + std::log(dilation);
  ProfileSample s;
  switch (kind) {
    case Kind::Bump: {
      const double r = std::exp(ts);
      const double k = 2.0 / (r_max - r_min);
      const BumpValue b = standard_bump(k * r - (r_min + r_max) / (r_max - r_min));
      s.u = b.value;
      s.ru = r * k * b.d1;
      s.r2u = r * r * k * k * b.d2;
      break;
    }
    case Kind::Polynomial: {
      const double r = std::exp(ts);
      if (r <= r_min || r >= r_max) break;
      const double P = (r - r_min) * (r_max - r);
      const double dP = r_min + r_max - 2.0 * r;
      const double p = order;
      const double Pm2 = std::pow(P, p - 2.0);
      const double Pm1 = Pm2 * P;
      s.u = Pm1 * P;
      s.ru = r * p * Pm1 * dP;
      s.r2u = r * r * (p * (p - 1.0) * Pm2 * dP * dP - 2.0 * p * Pm1);
      break;
    }
    case Kind::LogBump: {
      const double w = half_width;
      const BumpValue b = standard_bump((ts - center) / w);
      const double dt = power * b.value + b.d1 / w;
      const double dtt = power * power * b.value + 2.0 * power * b.d1 / w + b.d2 / (w * w);
      s.log_scale = power * ts;
      s.u = b.value;
      s.ru = dt;
      s.r2u = dtt - dt;
      break;
    }
  }
  return s;
}

RadialProfile RadialProfile::dilated(double t) const {
  if (!(t > 0.0)) throw InvalidArgument("dilation factor must be positive");
  RadialProfile p = *this;
  p.dilation *= t;
  return p;
}

XTestFunction XTestFunction::dilated(double t) const {
  XTestFunction u = *this;
  u.profile = profile.dilated(t);
  return u;
}

XTestFunction sphere_mode_function(int n, int k, RadialProfile profile, std::string name) {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  if (k < 0) throw InvalidArgument("mode degree must be >= 0");
  profile.validate();
  XTestFunction u;
  u.profile = profile;
  u.n = n;
  u.mode = k;
  u.lambda = static_cast<double>(k) * (n - 2 + k);
  u.name = std::move(name);
  return u;
}

}  // namespace rellich
