#include "rellich/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {
namespace {

constexpr double kPi = std::numbers::pi;

void check_sorted(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= 0.0) || !std::isfinite(v[i])) {
      throw InvalidArgument("eigenvalues must be finite and nonnegative");
    }
    if (i > 0 && v[i] < v[i - 1]) throw InvalidArgument("eigenvalues must be sorted ascending");
  }
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_number(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad number '" + s + "' in " + context);
  }
  if (used != s.size()) throw InvalidArgument("bad number '" + s + "' in " + context);
  return v;
}

/// "1.2", "pi", "pi/2", "3pi/4", "0.75pi", "0.75*pi".
double parse_angle(std::string s) {
  s = trim(s);
  const auto at = s.find("pi");
  if (at == std::string::npos) return parse_number(s, "angle");
  std::string coef = trim(s.substr(0, at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double value = kPi;
  if (coef == "-") {
    value = -kPi;
  } else if (!coef.empty()) {
    value *= parse_number(coef, "angle");
  }
  std::string rest = trim(s.substr(at + 2));
  if (!rest.empty()) {
    if (rest.front() != '/') throw InvalidArgument("bad angle '" + s + "'");
    value /= parse_number(trim(rest.substr(1)), "angle");
  }
  return value;
}

/// Symmetric tridiagonal pencil (diag, off) with diagonal mass; the
/// standard form is W^{-1/2} K W^{-1/2}.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1
};

/// Number of eigenvalues strictly below x (Sturm sequence).
std::size_t sturm_count(const Tridiagonal& t, double x) {
  std::size_t count = 0;
  double d = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = t.diag[i] - x - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, std::size_t count) {
  const std::size_t size = t.diag.size();
  count = std::min(count, size);
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < size; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < size ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  std::vector<double> out;
  out.reserve(count);
  double floor = lo;
  for (std::size_t k = 0; k < count; ++k) {
    double a = floor;
    double b = hi;
    for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(t, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(0.5 * (a + b));
    floor = a;
  }
  return out;
}

double simpson(double (*f)(double, double), double param, double a, double b) {
  return (b - a) / 6.0 * (f(a, param) + 4.0 * f(0.5 * (a + b), param) + f(b, param));
}

double sin_power(double theta, double power) { return std::pow(std::sin(theta), power); }

struct CapResult {
  std::vector<double> values;
  double error_estimate = 0.0;
  std::size_t grid = 0;
  bool complete = true;
};

struct Estimate {
  double value = 0.0;
  double error = 0.0;  // relative Richardson correction
};

/// Richardson-extrapolated eigenvalues of order m from grids N and 2N.
std::vector<Estimate> extrapolated(int n, double theta0, int m, std::size_t grid,
                                   std::size_t count) {
  const auto coarse = cap_order_eigenvalues(n, theta0, m, grid, count);
  const auto fine = cap_order_eigenvalues(n, theta0, m, 2 * grid, count);
  std::vector<Estimate> out(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    out[i].value = (4.0 * fine[i] - coarse[i]) / 3.0;
    out[i].error = std::abs(out[i].value - fine[i]) / std::abs(out[i].value);
  }
  return out;
}

CapResult compute_cap(int n, double theta0, std::size_t count, const CapOptions& options) {
  std::size_t grid = options.grid;
  for (int attempt = 0;; ++attempt) {
    std::vector<Estimate> all;
    for (int m = 0; m <= options.m_max; ++m) {
      const auto v = extrapolated(n, theta0, m, grid, count);
      all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end(),
              [](const Estimate& a, const Estimate& b) { return a.value < b.value; });
    all.resize(std::min(count, all.size()));

    double worst = 0.0;
    for (const Estimate& e : all) worst = std::max(worst, e.error);
    if (worst <= options.tolerance) {
      CapResult result;
      result.values.reserve(all.size());
      for (const Estimate& e : all) result.values.push_back(e.value);
      result.error_estimate = worst;
      result.grid = grid;
      const auto next = cap_order_eigenvalues(n, theta0, options.m_max + 1, grid, 1);
      result.complete = next.empty() || next.front() > result.values.back();
      return result;
    }
    if (attempt >= 3) {
      throw ConvergenceError("cap spectrum did not converge: relative Richardson correction " +
                                 std::to_string(worst) + " exceeds tolerance " +
                                 std::to_string(options.tolerance) + " at grid " +
                                 std::to_string(grid),
                             all.empty() ? 0.0 : all.back().value, worst);
    }
    grid *= 2;
  }
}

}  // namespace

DomainSpec DomainSpec::full_sphere() { return DomainSpec{}; }

DomainSpec DomainSpec::cap(double theta0) {
  if (!(theta0 > 0.0 && theta0 < kPi)) throw InvalidArgument("cap radius must lie in (0, pi)");
  DomainSpec d;
  d.kind = Kind::Cap;
  d.angle = theta0;
  return d;
}

DomainSpec DomainSpec::arc(double length) {
  if (!(length > 0.0 && length < 2.0 * kPi)) throw InvalidArgument("arc length must lie in (0, 2 pi)");
  DomainSpec d;
  d.kind = Kind::Arc;
  d.angle = length;
  return d;
}

DomainSpec DomainSpec::explicit_list(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("explicit spectrum is empty");
  check_sorted(values);
  DomainSpec d;
  d.kind = Kind::Explicit;
  d.values = std::move(values);
  return d;
}

std::string DomainSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::FullSphere: return "sphere";
    case Kind::Cap: os << "cap:" << angle; break;
    case Kind::Arc: os << "arc:" << angle; break;
    case Kind::Explicit: os << "explicit(" << values.size() << ")"; break;
  }
  return os.str();
}

DomainSpec parse_domain(std::string_view text) {
  const std::string s = trim(std::string(text));
  if (s == "sphere") return DomainSpec::full_sphere();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("unknown domain '" + s + "'");
  const std::string kind = s.substr(0, colon);
  const std::string arg = s.substr(colon + 1);
  if (kind == "cap") return DomainSpec::cap(parse_angle(arg));
  if (kind == "arc") return DomainSpec::arc(parse_angle(arg));
  if (kind == "file") return DomainSpec::explicit_list(read_eigenvalue_file(arg));
  throw InvalidArgument("unknown domain '" + s + "'");
}

std::vector<double> read_eigenvalue_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open eigenvalue file '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) values.push_back(parse_number(token, path));
  }
  return values;
}

// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::vector<double> values, Extender extend, DomainSpec domain,
                   int dimension, ResolutionMeta meta)
    : values_(std::move(values)),
      extend_(std::move(extend)),
      domain_(std::move(domain)),
      dimension_(dimension),
      meta_(meta) {
  check_sorted(values_);
}

std::vector<double> Spectrum::first(std::size_t count) const {
  if (count <= values_.size()) return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)};
  if (extend_) return extend_(count);
  return values_;
}

double Spectrum::lambda_min() const {
  if (values_.empty()) throw InvalidArgument("empty spectrum");
  return values_.front();
}

Spectrum full_sphere_spectrum(int n, std::size_t count) {
  if (n < 2) throw InvalidArgument("full sphere spectrum needs n >= 2");
  if (count < 1) throw InvalidArgument("count must be >= 1");
  auto generate = [n](std::size_t c) {
    std::vector<double> v(c);
    for (std::size_t k = 0; k < c; ++k) {
      const double kk = static_cast<double>(k);
      v[k] = kk * (n - 2 + kk);
    }
    return v;
  };
  return Spectrum(generate(count), generate, DomainSpec::full_sphere(), n);
}

Spectrum arc_spectrum(double length, std::size_t count) {
  const DomainSpec domain = DomainSpec::arc(length);
  if (count < 1) throw InvalidArgument("count must be >= 1");
  auto generate = [length](std::size_t c) {
    std::vector<double> v(c);
    for (std::size_t k = 1; k <= c; ++k) {
      const double q = static_cast<double>(k) * kPi / length;
      v[k - 1] = q * q;
    }
    return v;
  };
  return Spectrum(generate(count), generate, domain, 2);
}

std::vector<double> cap_order_eigenvalues(int n, double theta0, int m, std::size_t grid,
                                          std::size_t count) {
  if (n < 3) throw InvalidArgument("caps need n >= 3");
  if (!(theta0 > 0.0 && theta0 < kPi)) throw InvalidArgument("cap radius must lie in (0, pi)");
  if (grid < 8) throw InvalidArgument("cap grid too small");
  if (m < 0) throw InvalidArgument("azimuthal order must be >= 0");

  const double h = theta0 / static_cast<double>(grid);
  const double wp = n - 2.0;     // weight exponent sin^{n-2}
  const double qp = n - 4.0;     // potential exponent sin^{n-4}
  const double q = static_cast<double>(m) * (m + n - 3.0);
  const std::size_t first = m == 0 ? 0 : 1;  // phi'(0) = 0 for m = 0, phi(0) = 0 otherwise
  const std::size_t size = grid - first;     // nodes first..grid-1; phi(theta0) = 0

  Tridiagonal t;
  t.diag.resize(size);
  t.off.resize(size > 0 ? size - 1 : 0);
  std::vector<double> mass(size);
  std::vector<double> stiff_off(size > 0 ? size - 1 : 0);

  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t i = k + first;
    const double theta = static_cast<double>(i) * h;
    const double left = theta - 0.5 * h;
    const double right = theta + 0.5 * h;
    const double flux_right = sin_power(right, wp) / h;
    double flux_left = 0.0;
    double cell_mass = 0.0;
    double cell_potential = 0.0;
    if (i == 0) {
      cell_mass = simpson(sin_power, wp, 0.0, right);
    } else {
      flux_left = sin_power(left, wp) / h;
      cell_mass = simpson(sin_power, wp, left, right);
      if (q != 0.0) cell_potential = q * simpson(sin_power, qp, left, right);
    }
    mass[k] = cell_mass;
    t.diag[k] = flux_left + flux_right + cell_potential;
    if (k + 1 < size) stiff_off[k] = -flux_right;
  }
  for (std::size_t k = 0; k < size; ++k) t.diag[k] /= mass[k];
  for (std::size_t k = 0; k + 1 < size; ++k) t.off[k] = stiff_off[k] / std::sqrt(mass[k] * mass[k + 1]);

  return lowest_eigenvalues(t, count);
}

Spectrum cap_spectrum(int n, double theta0, std::size_t count, const CapOptions& options) {
  const DomainSpec domain = DomainSpec::cap(theta0);
  if (n < 3) throw InvalidArgument("caps need n >= 3");
  if (options.grid < 64) throw InvalidArgument("cap grid must be >= 64");
  if (count < 1) throw InvalidArgument("count must be >= 1");
  if (options.m_max < 0) throw InvalidArgument("m_max must be >= 0");

  const CapResult r = compute_cap(n, theta0, count, options);
  ResolutionMeta meta;
  meta.grid = r.grid;
  meta.refined_grid = 2 * r.grid;
  meta.error_estimate = r.error_estimate;
  meta.m_max = options.m_max;
  meta.complete = r.complete;
  auto extend = [n, theta0, options](std::size_t c) { return compute_cap(n, theta0, c, options).values; };
  return Spectrum(r.values, extend, domain, n, meta);
}

Spectrum explicit_spectrum(std::vector<double> values, int dimension) {
  DomainSpec domain = DomainSpec::explicit_list(values);
  return Spectrum(std::move(values), nullptr, std::move(domain), dimension);
}

Spectrum make_spectrum(int n, const DomainSpec& domain, std::size_t count,
                       const CapOptions& cap_options) {
  switch (domain.kind) {
    case DomainSpec::Kind::FullSphere: return full_sphere_spectrum(n, count);
    case DomainSpec::Kind::Cap: return cap_spectrum(n, domain.angle, count, cap_options);
    case DomainSpec::Kind::Arc:
      if (n != 2) throw InvalidArgument("arcs are domains of S^1 (n = 2 only)");
      return arc_spectrum(domain.angle, count);
    case DomainSpec::Kind::Explicit: return explicit_spectrum(domain.values, n);
  }
  throw InvalidArgument("unknown domain kind");
}

double lambda_min(const Spectrum& spectrum) { return spectrum.lambda_min(); }

}  // namespace rellich
