#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "rellich/params.hpp"
#include "rellich/profiles.hpp"

namespace rellich {

/// Composite Gauss-Legendre quadrature with 32 nodes per panel on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels);

struct QuadratureOptions {
  std::size_t panels = 16;
  std::size_t max_panels = 1 << 14;
  double tolerance = 1e-12;  ///< relative agreement of panels vs 2*panels
};

/// Integrates by doubling the panel count until two successive results
/// agree; throws ConvergenceError with the last pair otherwise.
double converged_integral(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& options = {});

struct WeightedIntegrals {
  double lhs = 0.0;  ///< int |x|^alpha |Delta u|^2
  double rhs = 0.0;  ///< int |x|^{alpha-2} |grad u|^2
  double ratio() const { return lhs / rhs; }
};

/// Both sides of the weighted inequality, reduced to integrals in t = log r.
/// The angular factor is analytic: Delta u = (U'' + (n-1)U'/r - lambda U/r^2) phi
/// and |grad u|^2 integrates to U'^2 + lambda U^2 / r^2. The common surface
/// measure constant is dropped.
WeightedIntegrals weighted_integrals(const XTestFunction& u, double alpha,
                                     const QuadratureOptions& options = {});

struct RadialIdentity {
  double lhs = 0.0;         ///< int |x|^alpha |Delta u|^2
  double gradient = 0.0;    ///< int |x|^{alpha-2} |grad u|^2
  double remainder = 0.0;   ///< int |x|^{2-n} |grad v|^2
  double cross = 0.0;       ///< int |x|^{1-n} v v_r, should vanish
  double defect = 0.0;      ///< |lhs - ((n-a)/2)^2 gradient - remainder| / lhs
  double cross_relative = 0.0;  ///< |cross| / gradient
};

/// Checks int |x|^a |Du|^2 = ((n-a)/2)^2 int |x|^{a-2}|grad u|^2 + int |x|^{2-n}|grad v|^2
/// with v = |x|^{(n+a-2)/2} u_r. `v_exponent` overrides (n+a-2)/2.
RadialIdentity radial_identity_check(const XTestFunction& u, double alpha,
                                     std::optional<double> v_exponent = std::nullopt,
                                     const QuadratureOptions& options = {});

struct WitnessSearch {
  int k_max = 4;
  std::vector<double> epsilons = {0.5, 0.2, 0.1, 0.05, 0.02, 0.01};
};

struct Witness {
  XTestFunction function;
  double quotient = 0.0;
  double epsilon = 0.0;
  int mode = 0;
};

/// Why no function in the search family beat delta_rad.
struct NoWitnessCertificate {
  double delta_rad = 0.0;
  double best_quotient = 0.0;   ///< smallest quotient seen
  double best_limit = 0.0;      ///< min over searched modes k >= 1 of the mode function
  int best_mode = 0;
  std::string reason;
};

struct WitnessResult {
  std::optional<Witness> witness;
  std::optional<NoWitnessCertificate> certificate;
  double delta_rad = 0.0;
  double target_constant = 0.0;  ///< certified constant (M or critical)

  bool found() const { return witness.has_value(); }
};

/// Searches the mode-k >= 1 log-bump family r^{(4-n-alpha)/2} g0(eps log r)
/// for a function whose quotient is below delta_rad and within `target` of
/// the certified constant. Full sphere only.
WitnessResult symmetry_breaking_witness(int n, double alpha, double target,
                                        const WitnessSearch& search = {});

/// Declarative regression corpus.
struct CorpusEntry {
  XTestFunction function;
  double alpha = 0.0;
};

/// Parses the `[function]` key-value corpus format (see data/corpus_v1.txt).
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// The built-in 12-function corpus (n in {2,3,4,5}, alpha in {-1,0,1},
/// modes k in {0,1}).
std::vector<CorpusEntry> default_corpus();
const std::string& default_corpus_text();

}  // namespace rellich
