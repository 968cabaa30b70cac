#include "rellich/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rellich/errors.hpp"
#include "rellich/quad_verify.hpp"

namespace rellich {
namespace {

double beta(const Params& p) { return (p.n - 4.0 + p.alpha) / 2.0; }

// Merges components with equal eigenvalue; returns (lambda, merged g).
std::vector<ModeComponent> merge_modes(std::span<const ModeComponent> w) {
  std::vector<ModeComponent> out;
  for (const ModeComponent& c : w) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const ModeComponent& m) { return m.lambda == c.lambda; });
    if (it == out.end()) {
      out.push_back(c);
      continue;
    }
    const SGrid& a = it->g.grid;
    const SGrid& b = c.g.grid;
    if (a.count != b.count || a.start != b.start || a.step != b.step) {
      throw InvalidArgument("components of one eigenspace must share a grid");
    }
    const bool derivs = it->g.has_derivatives() && c.g.has_derivatives();
    for (std::size_t i = 0; i < a.count; ++i) {
      it->g.g[i] += c.g.g[i];
      if (derivs) {
        it->g.dg[i] += c.g.dg[i];
        it->g.d2g[i] += c.g.d2g[i];
      }
    }
    if (!derivs) {
      it->g.dg.clear();
      it->g.d2g.clear();
    }
  }
  return out;
}

double trapezoid_sq(const std::vector<double>& v, double step) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
    s += w * v[i] * v[i];
  }
  return s * step;
}

}  // namespace

void CylinderFunction::validate() const {
  if (g.size() != grid.count || grid.count < 3) throw InvalidArgument("cylinder samples do not match grid");
  if (has_derivatives() && (dg.size() != g.size() || d2g.size() != g.size())) {
    throw InvalidArgument("derivative samples do not match grid");
  }
  double peak = 0.0;
  for (double v : g) peak = std::max(peak, std::abs(v));
  const double ends = std::max(std::abs(g.front()), std::abs(g.back()));
  if (ends > 1e-14 * peak) throw InvalidArgument("cylinder function does not vanish at the grid ends");
}

CylinderFunction bump_family(double epsilon, double lambda, double step, double shift) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive");
  if (!(step > 0.0)) throw InvalidArgument("step must be positive");
  const double half = 1.0 / epsilon;
  const auto cells = static_cast<std::size_t>(std::ceil(2.0 * half / step));
  auto profile = [&](double s, double v[3]) {
    const BumpValue b = standard_bump(epsilon * (s - shift));
    v[0] = b.value;
    v[1] = epsilon * b.d1;
    v[2] = epsilon * epsilon * b.d2;
  };
  return sample_cylinder(profile, shift - half, shift + half, cells, lambda);
}

QuotientResult mode_quotient(const CylinderFunction& w, double A, double Bl, double Cl) {
  w.validate();
  const std::size_t n = w.grid.count;
  const double h = w.grid.step;
  std::vector<double> d1(n), d2(n);
  const bool fd = !w.has_derivatives();
  if (fd) {
    // g is extended by zero past the grid ends.
    auto at = [&](std::size_t i, int o) -> double {
      const long j = static_cast<long>(i) + o;
      return (j < 0 || j >= static_cast<long>(n)) ? 0.0 : w.g[static_cast<std::size_t>(j)];
    };
    for (std::size_t i = 0; i < n; ++i) {
      d1[i] = (at(i, 1) - at(i, -1)) / (2.0 * h);
      d2[i] = (at(i, 1) - 2.0 * w.g[i] + at(i, -1)) / (h * h);
    }
  } else {
    d1 = w.dg;
    d2 = w.d2g;
  }

  std::vector<double> op(n);
  for (std::size_t i = 0; i < n; ++i) op[i] = d2[i] + A * d1[i] - Bl * w.g[i];

  QuotientResult q;
  q.numerator = trapezoid_sq(op, h);
  q.denominator = trapezoid_sq(d1, h) + Cl * trapezoid_sq(w.g, h);
  if (!(q.denominator > 0.0)) throw InvalidArgument("denominator vanishes (zero function?)");
  q.ratio = q.numerator / q.denominator;
  q.step = h;
  q.truncation = 0.5 * (w.grid.end() - w.grid.start);
  q.points = n;
  q.finite_differences = fd;
  return q;
}

QuotientResult cylinder_quotient(const CylinderFunction& w, const Params& p, double lambda) {
  if (p.C + lambda < 0.0) throw InvalidArgument("C + lambda must be nonnegative");
  return mode_quotient(w, p.A, p.B + lambda, p.C + lambda);
}

QuotientResult cylinder_quotient(const CylinderFunction& w, const Params& p) {
  return cylinder_quotient(w, p, w.lambda);
}

CylinderFunction to_cylinder(const XTestFunction& u, const Params& p, std::size_t cells) {
  if (u.n != p.n) throw InvalidArgument("test function dimension differs from Params");
  u.profile.validate();
  if (cells < 8) throw InvalidArgument("to_cylinder needs at least 8 cells");
  const double b = beta(p);
  const RadialProfile& prof = u.profile;
  // g(s) = e^{b t} U(e^t) with t = -s.
  auto sample = [&](double s, double v[3]) {
    const double t = -s;
    const ProfileSample ps = prof.at_log(t);
    const double e = std::exp(b * t + ps.log_scale);
    v[0] = e * ps.u;
    v[1] = -e * (b * ps.u + ps.ru);
    v[2] = e * (b * b * ps.u + (2.0 * b + 1.0) * ps.ru + ps.r2u);
  };
  CylinderFunction w = sample_cylinder(sample, -prof.log_max(), -prof.log_min(), cells, u.lambda);
  w.mode = u.mode;
  return w;
}

std::vector<double> from_cylinder(const CylinderFunction& w, const Params& p) {
  const double b = beta(p);
  std::vector<double> out(w.grid.count);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(b * w.grid.at(i)) * w.g[i];
  return out;
}

std::vector<double> to_cylinder_samples(std::span<const double> u_samples, const SGrid& grid,
                                        const Params& p) {
  if (u_samples.size() != grid.count) throw InvalidArgument("sample count does not match grid");
  const double b = beta(p);
  std::vector<double> out(grid.count);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(-b * grid.at(i)) * u_samples[i];
  return out;
}

EquivalenceReport xspace_equivalence_check(const XTestFunction& u, const Params& p,
                                           const Spectrum& spectrum, std::size_t cells) {
  const double lambda = u.lambda;
  bool member = false;
  for (std::size_t want = 16;; want *= 2) {
    const std::vector<double> vals = spectrum.first(want);
    for (double v : vals) {
      if (std::abs(v - lambda) <= 1e-9 * std::max(1.0, std::abs(lambda))) member = true;
    }
    if (member || vals.empty() || vals.back() > lambda || vals.size() < want ||
        !spectrum.extendable()) {
      break;
    }
  }
  if (!member) {
    throw InvalidArgument("eigenvalue " + std::to_string(lambda) + " is not in the spectrum of " +
                          spectrum.domain().describe());
  }

  EquivalenceReport r;
  const WeightedIntegrals x = weighted_integrals(u, p.alpha);
  r.x_numerator = x.lhs;
  r.x_denominator = x.rhs;
  r.x_ratio = x.ratio();
  r.cylinder = cylinder_quotient(to_cylinder(u, p, cells), p, lambda);
  r.discrepancy = std::abs(r.x_ratio - r.cylinder.ratio) / std::abs(r.x_ratio);
  r.numerator_gap = std::abs(x.lhs - r.cylinder.numerator) / std::abs(x.lhs);
  r.denominator_gap = std::abs(x.rhs - r.cylinder.denominator) / std::abs(x.rhs);
  return r;
}

double poincare_xi(std::span<const ModeComponent> v) {
  if (v.empty()) throw InvalidArgument("poincare_xi needs at least one component");
  for (const ModeComponent& c : v) {
    if (!(c.lambda > 0.0)) {
      throw InvalidArgument("component with lambda = 0 has a nonzero angular mean");
    }
  }
  double grad = 0.0, mass = 0.0;
  for (const ModeComponent& c : merge_modes(v)) {
    const double m = trapezoid_sq(c.g.g, c.g.grid.step);
    grad += c.lambda * m;
    mass += m;
  }
  if (!(mass > 0.0)) throw InvalidArgument("poincare_xi of the zero function");
  return grad / mass;
}

QuotientResult combined_quotient(std::span<const ModeComponent> w, const Params& p) {
  if (w.empty()) throw InvalidArgument("combined_quotient needs at least one component");
  QuotientResult total;
  bool fd = false;
  for (const ModeComponent& c : merge_modes(w)) {
    if (std::all_of(c.g.g.begin(), c.g.g.end(), [](double v) { return v == 0.0; })) continue;
    const QuotientResult q = cylinder_quotient(c.g, p, c.lambda);
    total.numerator += q.numerator;
    total.denominator += q.denominator;
    total.points = std::max(total.points, q.points);
    total.step = std::max(total.step, q.step);
    total.truncation = std::max(total.truncation, q.truncation);
    fd = fd || q.finite_differences;
  }
  if (!(total.denominator > 0.0)) throw InvalidArgument("zero total denominator");
  total.ratio = total.numerator / total.denominator;
  total.finite_differences = fd;
  return total;
}

}  // namespace rellich
