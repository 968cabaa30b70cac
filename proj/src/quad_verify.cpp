#include "rellich/quad_verify.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "rellich/errors.hpp"
#include "rellich/spectra.hpp"

namespace rellich {

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels) {
  using Rule = boost::math::quadrature::gauss<double, 32>;
  if (panels == 0) throw InvalidArgument("gauss_legendre needs at least one panel");
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double c = lo + 0.5 * width;
    const double hw = 0.5 * width;
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += w[k] * (f(c + hw * x[k]) + f(c - hw * x[k]));
    total += hw * s;
  }
  return total;
}

double converged_integral(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& options) {
  std::size_t panels = std::max<std::size_t>(options.panels, 1);
  double coarse = gauss_legendre(f, a, b, panels);
  for (;;) {
    const std::size_t next = panels * 2;
    const double fine = gauss_legendre(f, a, b, next);
    const double scale = std::max(std::abs(fine), std::abs(coarse));
    if (std::abs(fine - coarse) <= options.tolerance * scale) return fine;
    if (next >= options.max_panels) {
      throw ConvergenceError("quadrature did not converge", coarse, fine);
    }
    panels = next;
    coarse = fine;
  }
}

WeightedIntegrals weighted_integrals(const XTestFunction& u, double alpha,
                                     const QuadratureOptions& options) {
  u.profile.validate();
  const RadialProfile& prof = u.profile;
  const double n = u.n;
  const double lambda = u.lambda;
  const double lo = prof.log_min();
  const double hi = prof.log_max();

  // dx = r^{n-1} dr dsigma = r^n dt dsigma; |x|^alpha |Delta u|^2 carries
  // r^{alpha-4} (r^2 U'' + (n-1) r U' - lambda U)^2.
  auto lhs = [&](double t) {
    const ProfileSample s = prof.at_log(t);
    const double core = s.r2u + (n - 1.0) * s.ru - lambda * s.u;
    return std::exp((alpha + n - 4.0) * t + 2.0 * s.log_scale) * core * core;
  };
  auto rhs = [&](double t) {
    const ProfileSample s = prof.at_log(t);
    return std::exp((alpha + n - 4.0) * t + 2.0 * s.log_scale) * (s.ru * s.ru + lambda * s.u * s.u);
  };
  WeightedIntegrals out;
  out.lhs = converged_integral(lhs, lo, hi, options);
  out.rhs = converged_integral(rhs, lo, hi, options);
  if (!(out.rhs > 0.0)) throw InvalidArgument("test function has zero gradient integral");
  return out;
}

RadialIdentity radial_identity_check(const XTestFunction& u, double alpha,
                                     std::optional<double> v_exponent,
                                     const QuadratureOptions& options) {
  if (!u.radial()) throw InvalidArgument("radial identity needs a radial test function");
  u.profile.validate();
  const RadialProfile& prof = u.profile;
  const double n = u.n;
  const double c = v_exponent.value_or((n + alpha - 2.0) / 2.0);
  const double lo = prof.log_min();
  const double hi = prof.log_max();

  // v = r^c U', r v_r = r^{c-1} (c rU' + r^2 U'').
  auto lhs = [&](double t) {
    const ProfileSample s = prof.at_log(t);
    const double core = s.r2u + (n - 1.0) * s.ru;
    return std::exp((alpha + n - 4.0) * t + 2.0 * s.log_scale) * core * core;
  };
  auto grad = [&](double t) {
    const ProfileSample s = prof.at_log(t);
    return std::exp((alpha + n - 4.0) * t + 2.0 * s.log_scale) * s.ru * s.ru;
  };
  auto rem = [&](double t) {
    const ProfileSample s = prof.at_log(t);
    const double rv = c * s.ru + s.r2u;
    return std::exp((2.0 * c - 2.0) * t + 2.0 * s.log_scale) * rv * rv;
  };
  auto cross = [&](double t) {
    const ProfileSample s = prof.at_log(t);
    return std::exp((2.0 * c - 2.0) * t + 2.0 * s.log_scale) * s.ru * (c * s.ru + s.r2u);
  };

  RadialIdentity out;
  out.lhs = converged_integral(lhs, lo, hi, options);
  out.gradient = converged_integral(grad, lo, hi, options);
  out.remainder = converged_integral(rem, lo, hi, options);
  // The cross term integrates an exact derivative to zero, so relative
  // agreement of two panel counts is meaningless; a fixed rule suffices.
  out.cross = gauss_legendre(cross, lo, hi, 4 * std::max<std::size_t>(options.panels, 1));
  const double half = (n - alpha) / 2.0;
  out.defect = std::abs(out.lhs - half * half * out.gradient - out.remainder) / out.lhs;
  out.cross_relative = std::abs(out.cross) / out.gradient;
  return out;
}

WitnessResult symmetry_breaking_witness(int n, double alpha, double target,
                                        const WitnessSearch& search) {
  if (!(target > 0.0)) throw InvalidArgument("witness target must be positive");
  if (search.k_max < 1) throw InvalidArgument("witness search needs k_max >= 1");
  const Params p = derive(n, alpha);
  const Spectrum sphere = full_sphere_spectrum(n, static_cast<std::size_t>(search.k_max) + 1);
  const ConstantReport report = classify(p, sphere);

  WitnessResult result;
  result.delta_rad = report.delta_rad;
  result.target_constant = report.critical ? *report.critical : report.M.value_or(0.0);

  struct Candidate {
    int k;
    double lambda;
    double limit;
  };
  std::vector<Candidate> modes;
  for (int k = 1; k <= search.k_max; ++k) {
    const double lambda = static_cast<double>(k) * (n - 2 + k);
    modes.push_back({k, lambda, mode_value(p, lambda)});
  }
  std::stable_sort(modes.begin(), modes.end(),
                   [](const Candidate& a, const Candidate& b) { return a.limit < b.limit; });

  std::vector<double> eps = search.epsilons;
  std::sort(eps.begin(), eps.end(), std::greater<>());
  const double power = (4.0 - n - alpha) / 2.0;

  NoWitnessCertificate cert;
  cert.delta_rad = result.delta_rad;
  cert.best_limit = modes.front().limit;
  cert.best_mode = modes.front().k;
  bool have = false;
  for (const Candidate& m : modes) {
    // Family quotients approach the mode limit from above.
    if (m.limit >= result.delta_rad) continue;
    for (double e : eps) {
      XTestFunction u = sphere_mode_function(n, m.k, RadialProfile::log_bump(power, 0.0, 1.0 / e),
                                             "witness");
      const double q = weighted_integrals(u, alpha).ratio();
      if (!have || q < cert.best_quotient) {
        cert.best_quotient = q;
        have = true;
      }
      if (q < result.delta_rad && q <= result.target_constant + target) {
        result.witness = Witness{u, q, e, m.k};
        return result;
      }
    }
  }
  if (cert.best_limit >= result.delta_rad) {
    cert.reason = "every searched mode k >= 1 has limit (gamma+lambda)^2/(h+lambda) >= delta_rad";
    if (!have) cert.best_quotient = cert.best_limit;
  } else {
    cert.reason = "no family member came within the target of the certified constant";
  }
  result.certificate = cert;
  return result;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

double number(const std::map<std::string, std::string>& kv, const std::string& key,
              std::optional<double> fallback = std::nullopt) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw InvalidArgument("corpus entry is missing key '" + key + "'");
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != it->second.size()) {
    throw InvalidArgument("corpus key '" + key + "' is not a number: " + it->second);
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

CorpusEntry build_entry(const std::map<std::string, std::string>& kv) {
  auto kind_it = kv.find("kind");
  if (kind_it == kv.end()) throw InvalidArgument("corpus entry is missing key 'kind'");
  const std::string& kind = kind_it->second;
  RadialProfile prof;
  if (kind == "bump") {
    prof = RadialProfile::bump(number(kv, "r_min"), number(kv, "r_max"));
  } else if (kind == "poly") {
    prof = RadialProfile::polynomial(number(kv, "r_min"), number(kv, "r_max"),
                                     static_cast<int>(number(kv, "order")));
  } else if (kind == "logbump") {
    prof = RadialProfile::log_bump(number(kv, "power"), number(kv, "center"),
                                   number(kv, "half_width"));
  } else {
    throw InvalidArgument("unknown profile kind '" + kind + "'");
  }
  const double dil = number(kv, "dilation", 1.0);
  if (dil != 1.0) prof = prof.dilated(dil);

  const int n = static_cast<int>(number(kv, "n"));
  const int k = static_cast<int>(number(kv, "mode", 0.0));
  auto name_it = kv.find("name");
  CorpusEntry e;
  e.function = sphere_mode_function(n, k, prof, name_it == kv.end() ? std::string() : name_it->second);
  if (kv.count("lambda")) e.function.lambda = number(kv, "lambda");
  e.alpha = number(kv, "alpha");
  return e;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::map<std::string, std::string> current;
  bool open = false;
  std::string line;
  int lineno = 0;
  auto flush = [&] {
    if (open) out.push_back(build_entry(current));
    current.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "[function]") {
      flush();
      open = true;
      continue;
    }
    const auto eq = line.find('=');
    if (!open || eq == std::string::npos) {
      throw InvalidArgument("corpus line " + std::to_string(lineno) + ": expected key = value");
    }
    current[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  flush();
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file " + path);
  return parse_corpus(in);
}

const std::string& default_corpus_text() {
  static const std::string text = R"(# rellich test-function corpus, version 1
#
# Each [function] block defines u(x) = U(|x|) phi(x/|x|) with phi a degree
# `mode` spherical harmonic on S^{n-1}, and the weight exponent alpha.
# kind = bump     U = b((2r - r_min - r_max)/(r_max - r_min))
# kind = poly     U = ((r - r_min)(r_max - r))^order
# kind = logbump  U = r^power b((log r - center)/half_width)
# where b(x) = exp(-1/(1-x^2)). Optional: dilation, lambda (overrides
# k(n-2+k)).

[function]
name = bump-3-0
n = 3
alpha = 0
mode = 0
kind = bump
r_min = 0.5
r_max = 2

[function]
name = poly-3-1
n = 3
alpha = 1
mode = 0
kind = poly
r_min = 0.3
r_max = 1.7
order = 4

[function]
name = logbump-2-m1
n = 2
alpha = -1
mode = 0
kind = logbump
power = 0.5
center = 0.2
half_width = 1.5

[function]
name = bump-4-0
n = 4
alpha = 0
mode = 0
kind = bump
r_min = 1
r_max = 3

[function]
name = poly-5-m1
n = 5
alpha = -1
mode = 0
kind = poly
r_min = 0.2
r_max = 1
order = 3

[function]
name = logbump-5-1
n = 5
alpha = 1
mode = 0
kind = logbump
power = -1
center = -0.3
half_width = 2

[function]
name = bump-2-1
n = 2
alpha = 1
mode = 0
kind = bump
r_min = 0.7
r_max = 1.9

[function]
name = bump-2-0-k1
n = 2
alpha = 0
mode = 1
kind = bump
r_min = 0.4
r_max = 2.5

[function]
name = poly-3-m1-k1
n = 3
alpha = -1
mode = 1
kind = poly
r_min = 0.5
r_max = 1.5
order = 5

[function]
name = logbump-4-0-k1
n = 4
alpha = 0
mode = 1
kind = logbump
power = 0
center = 0
half_width = 3

[function]
name = bump-5-0-k1
n = 5
alpha = 0
mode = 1
kind = bump
r_min = 0.25
r_max = 4

[function]
name = logbump-3-1-k1
n = 3
alpha = 1
mode = 1
kind = logbump
power = 0.25
center = 0.5
half_width = 1
)";
  return text;
}

std::vector<CorpusEntry> default_corpus() {
  std::istringstream in(default_corpus_text());
  return parse_corpus(in);
}

}  // namespace rellich
