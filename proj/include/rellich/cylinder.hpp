#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rellich/params.hpp"
#include "rellich/profiles.hpp"
#include "rellich/spectra.hpp"

namespace rellich {

/// Uniform grid s_i = start + i * step, i = 0..count-1, on the cylinder
/// axis s = -log|x|.
struct SGrid {
  double start = 0.0;
  double step = 0.025;
  std::size_t count = 0;

  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double end() const { return at(count == 0 ? 0 : count - 1); }
};

/// Separable cylinder function w(s, sigma) = g(s) phi(sigma) with phi an
/// L^2-normalized eigenfunction of eigenvalue `lambda` (phi = 1 for the
/// radial mode). g is stored as samples on an SGrid that extends at least
/// two cells past the support on each side; derivative samples are optional
/// and replace finite differences when present.
struct CylinderFunction {
  SGrid grid;
  std::vector<double> g;
  std::vector<double> dg;
  std::vector<double> d2g;
  double lambda = 0.0;
  int mode = 0;
  double s_min = 0.0;
  double s_max = 0.0;

  bool has_derivatives() const { return !dg.empty() && !d2g.empty(); }
  /// Throws InvalidArgument if g does not vanish at the grid ends.
  void validate() const;
};

/// g(s) = g0(epsilon (s - shift)) with g0 the standard bump, derivative
/// samples included. The grid resolves the support with a step no larger
/// than `step`, plus two padding cells on each side.
CylinderFunction bump_family(double epsilon, double lambda, double step = 0.025,
                             double shift = 0.0);

/// Samples `profile(s)` returning {g, g', g''} on a grid covering
/// [s_min, s_max] with `cells` cells (plus two padding cells each side).
template <typename Profile>
CylinderFunction sample_cylinder(Profile&& profile, double s_min, double s_max,
                                 std::size_t cells, double lambda,
                                 bool keep_derivatives = true);

struct QuotientResult {
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  double step = 0.0;
  double truncation = 0.0;  ///< half-length of the grid span
  std::size_t points = 0;
  bool finite_differences = false;
};

/// N = int |g'' + A g' - (B+lambda) g|^2 ds,  D = int (|g'|^2 + (C+lambda)|g|^2) ds
/// by the composite trapezoid rule. The angular factor is carried through
/// the eigenvalue: Delta_sigma w = -lambda w, int |grad_sigma w|^2 = lambda
/// int |w|^2. Without derivative samples g', g'' use central differences.
QuotientResult cylinder_quotient(const CylinderFunction& w, const Params& p,
                                 double lambda);

/// Same, taking the eigenvalue from the function's label.
QuotientResult cylinder_quotient(const CylinderFunction& w, const Params& p);

/// The one-dimensional quotient with raw coefficients:
/// int |g'' + A g' - Bl g|^2 / int (|g'|^2 + Cl |g|^2).
QuotientResult mode_quotient(const CylinderFunction& w, double A, double Bl, double Cl);

/// Emden-Fowler transform of a separable x-space function:
/// w(s) = |x|^{(n-4+alpha)/2} U(|x|) at |x| = e^{-s}. The grid resolves the
/// support with `cells` cells. Throws InvalidArgument if the profile does
/// not vanish near 0 and near infinity.
CylinderFunction to_cylinder(const XTestFunction& u, const Params& p,
                             std::size_t cells = 4000);

/// Inverse map on samples: U(r_i) = r_i^{(4-n-alpha)/2} g(s_i), r_i = e^{-s_i}.
std::vector<double> from_cylinder(const CylinderFunction& w, const Params& p);

/// Forward map on samples: g(s_i) = r_i^{(n-4+alpha)/2} U(r_i).
std::vector<double> to_cylinder_samples(std::span<const double> u_samples,
                                        const SGrid& grid, const Params& p);

struct EquivalenceReport {
  double x_numerator = 0.0;
  double x_denominator = 0.0;
  double x_ratio = 0.0;
  QuotientResult cylinder;
  double discrepancy = 0.0;  ///< relative gap between the two ratios
  double numerator_gap = 0.0;
  double denominator_gap = 0.0;
};

/// Computes the x-space quotient (weighted Gauss-Legendre quadrature) and
/// the cylinder quotient of the transformed function, returning their
/// relative discrepancy. The function's eigenvalue must belong to the
/// spectrum.
EquivalenceReport xspace_equivalence_check(const XTestFunction& u, const Params& p,
                                           const Spectrum& spectrum,
                                           std::size_t cells = 4000);

/// One separable term g_j(s) phi_j(sigma) of a cylinder function. Distinct
/// components carry mutually orthogonal eigenfunctions.
struct ModeComponent {
  double lambda = 0.0;
  CylinderFunction g;
};

/// xi_v = int |grad_sigma v|^2 / int |v|^2 for v with zero angular mean
/// (every component has lambda > 0).
double poincare_xi(std::span<const ModeComponent> v);

/// N and D of a sum of separable modes. Components with the same eigenvalue
/// are merged first (they share an eigenspace); the rest are orthogonal.
QuotientResult combined_quotient(std::span<const ModeComponent> w, const Params& p);

// ---------------------------------------------------------------------------

template <typename Profile>
CylinderFunction sample_cylinder(Profile&& profile, double s_min, double s_max,
                                 std::size_t cells, double lambda,
                                 bool keep_derivatives) {
  CylinderFunction w;
  const double step = (s_max - s_min) / static_cast<double>(cells);
  w.grid = SGrid{s_min - 2.0 * step, step, cells + 5};
  w.lambda = lambda;
  w.s_min = s_min;
  w.s_max = s_max;
  w.g.resize(w.grid.count);
  if (keep_derivatives) {
    w.dg.resize(w.grid.count);
    w.d2g.resize(w.grid.count);
  }
  for (std::size_t i = 0; i < w.grid.count; ++i) {
    const double s = w.grid.at(i);
    double v[3] = {0.0, 0.0, 0.0};
    if (s > s_min && s < s_max) profile(s, v);
    w.g[i] = v[0];
    if (keep_derivatives) {
      w.dg[i] = v[1];
      w.d2g[i] = v[2];
    }
  }
  return w;
}

}  // namespace rellich
