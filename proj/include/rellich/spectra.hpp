#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rellich {

/// Which subset of the unit sphere spans the cone.
struct DomainSpec {
  enum class Kind { FullSphere, Cap, Arc, Explicit };

  Kind kind = Kind::FullSphere;
  /// Cap: geodesic radius theta0 in (0, pi). Arc: length in (0, 2 pi).
  double angle = 0.0;
  /// Explicit: sorted nonnegative eigenvalues supplied by the user.
  std::vector<double> values;

  static DomainSpec full_sphere();
  static DomainSpec cap(double theta0);
  static DomainSpec arc(double length);
  static DomainSpec explicit_list(std::vector<double> values);

  bool is_full_sphere() const noexcept { return kind == Kind::FullSphere; }
  std::string describe() const;
};

/// Accepts `sphere`, `cap:THETA`, `arc:LEN`, `file:PATH`. Angles may be
/// written as plain numbers or as multiples of pi (`pi/2`, `0.75pi`).
DomainSpec parse_domain(std::string_view text);

/// Reads an explicit eigenvalue list: whitespace or comma separated
/// numbers, `#` starts a comment.
std::vector<double> read_eigenvalue_file(const std::string& path);

struct ResolutionMeta {
  std::size_t grid = 0;          ///< coarse grid size (0 for closed forms)
  std::size_t refined_grid = 0;  ///< grid used for the error estimate
  double error_estimate = 0.0;   ///< max relative Richardson correction
  int m_max = 0;                 ///< azimuthal orders scanned (caps)
  bool complete = true;          ///< false if order m_max+1 could intrude
};

/// Ascending Dirichlet eigenvalues of the Laplace-Beltrami operator on a
/// domain of the sphere. Immutable; `first(count)` extends past the stored
/// values by calling the domain's generator.
class Spectrum {
 public:
  using Extender = std::function<std::vector<double>(std::size_t count)>;

  Spectrum(std::vector<double> values, Extender extend, DomainSpec domain,
           int dimension, ResolutionMeta meta = {});

  /// The first `count` eigenvalues (fewer only for finite explicit lists).
  std::vector<double> first(std::size_t count) const;

  const std::vector<double>& values() const noexcept { return values_; }
  double lambda_min() const;
  bool extendable() const noexcept { return static_cast<bool>(extend_); }
  const DomainSpec& domain() const noexcept { return domain_; }
  int dimension() const noexcept { return dimension_; }
  const ResolutionMeta& meta() const noexcept { return meta_; }

 private:
  std::vector<double> values_;
  Extender extend_;
  DomainSpec domain_;
  int dimension_;
  ResolutionMeta meta_;
};

/// k(n-2+k), k = 0..count-1.
Spectrum full_sphere_spectrum(int n, std::size_t count);

/// (k pi / length)^2, k = 1..count. Circle arcs only exist for n = 2.
Spectrum arc_spectrum(double length, std::size_t count);

struct CapOptions {
  std::size_t grid = 2048;
  int m_max = 8;
  /// Relative tolerance on the Richardson correction between the grid
  /// and its refinement.
  double tolerance = 1e-5;
};

/// Lowest `count` eigenvalues on the geodesic cap of radius theta0 in
/// S^{n-1}, merged over azimuthal orders m = 0..m_max.
Spectrum cap_spectrum(int n, double theta0, std::size_t count,
                      const CapOptions& options = {});

Spectrum explicit_spectrum(std::vector<double> values, int dimension);

/// Dispatches on the domain kind.
Spectrum make_spectrum(int n, const DomainSpec& domain, std::size_t count,
                       const CapOptions& cap_options = {});

double lambda_min(const Spectrum& spectrum);

/// Finite-difference eigenvalues of the order-m cap problem
///   -(sin^{n-2} phi')' + m(m+n-3) sin^{n-4} phi = lambda sin^{n-2} phi
/// on (0, theta0), phi(theta0) = 0, at a single resolution (no
/// extrapolation). Exposed for convergence studies.
std::vector<double> cap_order_eigenvalues(int n, double theta0, int m,
                                          std::size_t grid,
                                          std::size_t count);

}  // namespace rellich
