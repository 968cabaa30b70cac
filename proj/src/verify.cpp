#include "rellich/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "rellich/cylinder.hpp"
#include "rellich/errors.hpp"
#include "rellich/mode_opt.hpp"
#include "rellich/params.hpp"
#include "rellich/quad_verify.hpp"
#include "rellich/scan.hpp"
#include "rellich/spectra.hpp"

namespace rellich {
namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

class Recorder {
 public:
  explicit Recorder(int criterion) : criterion_(criterion) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({criterion_, std::move(name), passed, std::move(detail)});
  }

  // Runs `body`; an exception becomes a failed check named `name`.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  int criterion_;
  std::vector<Check> checks_;
};

std::vector<Check> exact_constants() {
  Recorder r(1);
  r.guard("exact constants", [&] {
    const exact::SphereModeConstant m30 = exact::best_mode_constant_sphere(3, Rational(0));
    r.add("M(3,0) = 25/36 at k = 1", m30.value == Rational(25, 36) && m30.k == 1,
          "got " + to_string(m30.value) + " at k = " + m30.k.str());
    const std::pair<int, Rational> rad[] = {{3, Rational(9, 4)}, {2, Rational(1)}, {4, Rational(4)}};
    for (const auto& [n, want] : rad) {
      const Rational got = exact::derive(n, Rational(0)).delta_rad;
      r.add("delta_rad(" + std::to_string(n) + ",0) = " + to_string(want), got == want,
            "got " + to_string(got));
    }
    const std::pair<int, Rational> crit[] = {{4, Rational(3)}, {3, Rational(1)}};
    for (const auto& [n, want] : crit) {
      const Rational got = exact::critical_constant(n);
      r.add("critical_constant(" + std::to_string(n) + ") = " + to_string(want), got == want,
            "got " + to_string(got));
    }
    for (int n = 5; n <= 8; ++n) {
      const exact::SphereModeConstant m = exact::best_mode_constant_sphere(n, Rational(0));
      const Rational want(n * n, 4);
      r.add("M(" + std::to_string(n) + ",0) = n^2/4 at lambda = 0", m.value == want && m.k == 0,
            "got " + to_string(m.value) + " at k = " + m.k.str());
    }
    const Spectrum sphere = full_sphere_spectrum(3, 8);
    const ConstantReport rep = classify(derive(3, 0.0), sphere);
    const double want = to_double(Rational(25, 36));
    r.add("floating report matches 25/36",
          rep.M && std::abs(*rep.M - want) <= 4e-16 * want && rep.argmin_lambda == 2.0,
          rep.M ? "M = " + num(*rep.M) : "M absent");
  });
  return r.take();
}

std::vector<Check> positivity_knife_edge() {
  Recorder r(2);
  r.guard("positivity", [&] {
    const bool in0 = exact::minus_gamma_in_sphere_spectrum(2, Rational(0));
    const bool in_half = exact::minus_gamma_in_sphere_spectrum(2, Rational(1, 2));
    r.add("-gamma(2,0) = 1 lies in {k^2}", in0);
    r.add("-gamma(2,1/2) = 9/16 is not in {k^2}", !in_half);
    const Spectrum sphere = full_sphere_spectrum(2, 8);
    const ConstantReport a = classify(derive(2, Rational(0)), sphere);
    r.add("classify(2,0): delta = 0", !a.positive && a.M && *a.M == 0.0,
          std::string("regime ") + std::string(to_string(a.regime)));
    const ConstantReport b = classify(derive(2, Rational(1, 2)), sphere);
    r.add("classify(2,1/2): delta > 0", b.positive && b.M && *b.M > 0.0,
          b.M ? "M = " + num(*b.M) : "M absent");
  });
  return r.take();
}

std::vector<Check> mode_minimization() {
  Recorder r(3);
  const Params p = derive(3, Rational(0));
  for (int lambda : {0, 2, 6}) {
    r.guard("lambda = " + std::to_string(lambda), [&] {
      const double closed =
          lambda == 0 ? to_double(exact::derive(3, Rational(0)).delta_rad)
                      : to_double(exact::mode_value(3, Rational(0), Rational(lambda)));
      const ModeMinimum coarse = minimize_mode(ModeProblem::from(p, lambda, ModeGrid{100.0, 8000}));
      const ModeMinimum fine = minimize_mode(ModeProblem::from(p, lambda, ModeGrid{200.0, 16000}));
      const double d1 = std::abs(coarse.value - closed);
      const double d2 = std::abs(fine.value - closed);
      r.add("lambda = " + std::to_string(lambda) + ": |value - closed form| <= 1e-3 at L = 100",
            d1 <= 1e-3, "value " + num(coarse.value) + ", closed " + num(closed) + ", defect " + sci(d1));
      r.add("lambda = " + std::to_string(lambda) + ": L = 200 reduces the defect >= 3x",
            d2 * 3.0 <= d1, "defects " + sci(d1) + " -> " + sci(d2) + " (ratio " + num(d1 / d2) + ")");
    });
  }
  return r.take();
}

std::vector<Check> family_convergence() {
  Recorder r(4);
  const std::pair<int, double> cases[] = {{3, 2.0}, {4, 3.0}};
  for (const auto& [n, lambda] : cases) {
    const std::string tag = "(" + std::to_string(n) + ",0,lambda=" + num(lambda) + ")";
    r.guard(tag, [&] {
      const Params p = derive(n, Rational(0));
      const double limit = mode_value(p, lambda);
      auto err = [&](double e) { return std::abs(scaled_family_value(p, lambda, e) - limit); };
      const double e1 = err(0.1), e2 = err(0.05), e3 = err(0.025);
      for (const auto& [a, b, label] :
           {std::tuple{e1, e2, "0.1 -> 0.05"}, std::tuple{e2, e3, "0.05 -> 0.025"}}) {
        const double ratio = a / b;
        r.add(tag + " error ratio " + label + " in [3.5, 4.5]", ratio >= 3.5 && ratio <= 4.5,
              "errors " + sci(a) + ", " + sci(b) + ", ratio " + num(ratio));
      }
      const double e4 = err(0.01);
      r.add(tag + " within 1e-3 at eps = 0.01", e4 <= 1e-3, "error " + sci(e4));
    });
  }
  return r.take();
}

std::vector<Check> equivalence() {
  Recorder r(5);
  r.guard("corpus", [&] {
    const std::vector<CorpusEntry> corpus = default_corpus();
    std::set<int> ns, modes;
    std::set<double> alphas;
    double worst = 0.0;
    std::string worst_name;
    for (const CorpusEntry& e : corpus) {
      ns.insert(e.function.n);
      modes.insert(e.function.mode);
      alphas.insert(e.alpha);
      const Params p = derive(e.function.n, e.alpha);
      const EquivalenceReport rep = xspace_equivalence_check(
          e.function, p, full_sphere_spectrum(e.function.n, 4));
      r.add(e.function.name + ": relative gap <= 1e-6", rep.discrepancy <= 1e-6,
            "x " + num(rep.x_ratio) + ", cylinder " + num(rep.cylinder.ratio) + ", gap " +
                sci(rep.discrepancy));
      if (rep.discrepancy >= worst) {
        worst = rep.discrepancy;
        worst_name = e.function.name;
      }
    }
    const bool coverage = corpus.size() == 12 && ns == std::set<int>{2, 3, 4, 5} &&
                          alphas == std::set<double>{-1.0, 0.0, 1.0} && modes == std::set<int>{0, 1};
    r.add("corpus spans n in {2..5}, alpha in {-1,0,1}, k in {0,1}", coverage,
          std::to_string(corpus.size()) + " functions, worst gap " + sci(worst) + " (" + worst_name + ")");
  });
  return r.take();
}

std::vector<Check> radial_identity() {
  Recorder r(6);
  r.guard("corpus", [&] {
    int count = 0;
    for (const CorpusEntry& e : default_corpus()) {
      if (!e.function.radial()) continue;
      ++count;
      const RadialIdentity id = radial_identity_check(e.function, e.alpha);
      r.add(e.function.name + ": defect <= 1e-8, cross <= 1e-10",
            id.defect <= 1e-8 && id.cross_relative <= 1e-10,
            "defect " + sci(id.defect) + ", cross " + sci(id.cross_relative));
    }
    r.add("corpus has radial functions", count > 0, std::to_string(count) + " radial");
  });
  return r.take();
}

std::vector<Check> witnesses() {
  Recorder r(7);
  for (int n : {3, 4}) {
    const std::string tag = "(" + std::to_string(n) + ",0)";
    r.guard(tag, [&] {
      const WitnessResult w = symmetry_breaking_witness(n, 0.0, 1e-2);
      if (!w.found()) {
        r.add(tag + " witness found", false, w.certificate ? w.certificate->reason : "");
        return;
      }
      const double q = w.witness->quotient;
      r.add(tag + " quotient < delta_rad - 0.5", q < w.delta_rad - 0.5,
            "quotient " + num(q) + ", delta_rad " + num(w.delta_rad));
      r.add(tag + " quotient >= certified constant - 1e-3", q >= w.target_constant - 1e-3,
            "certified " + num(w.target_constant) + ", eps " + num(w.witness->epsilon));
    });
  }
  r.guard("(5,0)", [&] {
    const WitnessResult w = symmetry_breaking_witness(5, 0.0, 1e-2);
    r.add("(5,0) returns the no-witness certificate", !w.found() && w.certificate.has_value(),
          w.certificate ? w.certificate->reason + ", best limit " + num(w.certificate->best_limit)
                        : "witness quotient " + num(w.witness->quotient));
  });
  return r.take();
}

std::vector<Check> lemmas(const Config& config) {
  Recorder r(8);
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ModeGrid grid{config.L, config.N};
  const double tol = config.tol_bound;

  r.guard("lemma V instances", [&] {
    int passed = 0;
    double worst = INFINITY;
    for (int i = 0; i < 200; ++i) {
      ModeProblem prob;
      prob.A = -5.0 + 10.0 * unit(rng);
      prob.Cl = 0.05 + 4.95 * unit(rng);
      prob.Bl = 2.0 * prob.Cl * (1.0 - unit(rng));
      prob.grid = grid;
      const LemmaCheck c = lemma_V_check(prob, tol);
      passed += c.passed ? 1 : 0;
      worst = std::min(worst, c.value - c.bound);
    }
    r.add("200 lemma V instances: value >= bound - tol", passed == 200,
          std::to_string(passed) + "/200, min(value - bound) = " + sci(worst));
  });

  r.guard("lemma Y instances", [&] {
    int passed = 0, negative = 0;
    double worst = INFINITY;
    for (int i = 0; i < 200;) {
      ModeProblem prob;
      prob.A = -5.0 + 10.0 * unit(rng);
      prob.Cl = 0.05 + 4.95 * unit(rng);
      prob.Bl = -5.0 + 15.0 * unit(rng);
      prob.grid = grid;
      if (!lemma_Y_hypothesis(prob.A, prob.Bl, prob.Cl)) continue;
      ++i;
      negative += prob.Bl < 0.0 ? 1 : 0;
      const LemmaCheck c = lemma_Y_check(prob, tol);
      passed += c.passed ? 1 : 0;
      worst = std::min(worst, c.value - c.bound);
    }
    r.add("200 lemma Y instances: value >= bound - tol", passed == 200,
          std::to_string(passed) + "/200 (" + std::to_string(negative) +
              " with Bl < 0), min(value - bound) = " + sci(worst));
  });

  r.guard("phi positivity", [&] {
    std::uniform_int_distribution<int> dim(2, 8);
    int passed = 0;
    for (int i = 0; i < 100;) {
      const int n = dim(rng);
      const double alpha = -4.0 + 12.0 * unit(rng);
      const Params p = derive(n, alpha);
      if (!(p.h > 0.0)) continue;
      ++i;
      bool ok = true;
      for (int j = 0; j <= 1000; ++j) ok = ok && phi(p, 0.05 * j) > 0.0;
      passed += ok ? 1 : 0;
    }
    r.add("Phi(t) > 0 on [0, 50] for 100 admissible (n, alpha)", passed == 100,
          std::to_string(passed) + "/100");
  });
  return r.take();
}

std::vector<Check> spectra(const Config& config) {
  Recorder r(9);
  const CapOptions opts{config.cap_grid, config.m_max, config.cap_tol};
  for (int n : {3, 4, 5}) {
    r.guard("hemisphere n = " + std::to_string(n), [&] {
      const Spectrum s = cap_spectrum(n, kPi / 2.0, 4, opts);
      const double rel = std::abs(s.lambda_min() - (n - 1.0)) / (n - 1.0);
      r.add("hemisphere n = " + std::to_string(n) + ": lambda = n-1 within 1e-5", rel <= 1e-5,
            "lambda " + num(s.lambda_min()) + ", rel. error " + sci(rel) + ", grid " +
                std::to_string(s.meta().grid) + " -> " + std::to_string(s.meta().refined_grid));
    });
  }
  r.guard("arcs", [&] {
    bool ok = true;
    double worst = 0.0;
    for (double len : {kPi, kPi / 2.0, 2.0 * kPi / 3.0, 1.0, 6.0}) {
      const Spectrum s = arc_spectrum(len, 6);
      for (std::size_t k = 1; k <= 6; ++k) {
        const double want = std::pow(static_cast<double>(k) * kPi / len, 2);
        const double rel = std::abs(s.values()[k - 1] - want) / want;
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-14;
      }
    }
    r.add("arc spectra equal (k pi / L)^2", ok, "max rel. deviation " + sci(worst));
  });
  for (int n : {3, 4}) {
    r.guard("cap monotonicity n = " + std::to_string(n), [&] {
      const double thetas[] = {kPi / 6, kPi / 4, kPi / 3, kPi / 2, 2 * kPi / 3, 5 * kPi / 6};
      std::vector<double> lam;
      for (double t : thetas) lam.push_back(cap_spectrum(n, t, 1, opts).lambda_min());
      bool ok = true;
      std::string seq;
      for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i > 0) ok = ok && lam[i] < lam[i - 1];
        seq += (i ? ", " : "") + num(lam[i]);
      }
      r.add("cap n = " + std::to_string(n) + ": lambda_min decreases in theta0", ok, seq);
    });
  }
  return r.take();
}

std::vector<Check> scan_strip(const Config& config) {
  Recorder r(10);
  for (int n : {4, 5}) {
    const std::string tag = "n = " + std::to_string(n);
    r.guard(tag, [&] {
      const Spectrum sphere = full_sphere_spectrum(n, config.spectrum_count);
      // The strip [4-n, alpha*) with a margin of 1/2 on each side.
      const Rational critical(4 - n);
      const double bound = alpha_star_bound(n);
      const Rational to(static_cast<long long>(std::floor((bound + 0.5) * 16.0)), 16);
      const auto alphas = alpha_grid(critical - Rational(1, 2), to, Rational(1, 16));
      const ScanResult res = run_scan(n, alphas, sphere, true, config);
      if (res.error) {
        r.add(tag + " scan completes", false, *res.error);
        return;
      }
      int strip = 0, labelled = 0, related = 0, outside = 0, outside_ok = 0;
      double worst = -INFINITY;
      bool sorted = true;
      for (std::size_t i = 0; i < res.rows.size(); ++i) {
        const ScanRow& row = res.rows[i];
        if (i > 0) sorted = sorted && res.rows[i - 1].alpha_exact < row.alpha_exact;
        const bool in_strip = row.alpha_exact > critical && row.alpha < bound;
        if (row.M && row.numeric_delta) {
          worst = std::max(worst, *row.numeric_delta - *row.M);
          related += *row.numeric_delta <= *row.M + config.tol_bound ? 1 : 0;
        }
        if (in_strip) {
          ++strip;
          labelled += (!row.certified && row.regime == "Uncertified" && row.numeric_delta) ? 1 : 0;
        } else {
          ++outside;
          outside_ok += row.certified ? 1 : 0;
        }
      }
      int with_both = 0;
      for (const ScanRow& row : res.rows) with_both += (row.M && row.numeric_delta) ? 1 : 0;
      r.add(tag + ": strip rows labelled Uncertified with numeric_delta", strip > 0 && labelled == strip,
            std::to_string(labelled) + "/" + std::to_string(strip) + " strip rows");
      r.add(tag + ": numeric_delta <= M + tol", related == with_both,
            std::to_string(related) + "/" + std::to_string(with_both) +
                " rows, max(numeric - M) = " + sci(worst));
      r.add(tag + ": rows outside the strip are certified, sorted by alpha",
            outside_ok == outside && sorted,
            std::to_string(outside_ok) + "/" + std::to_string(outside) + " rows");
    });
  }
  return r.take();
}

}  // namespace

Suite parse_suite(std::string_view text) {
  for (Suite s : {Suite::Constants, Suite::Modes, Suite::Lemmas, Suite::Equivalence, Suite::Radial,
                  Suite::Witnesses, Suite::Spectra, Suite::Scan, Suite::All}) {
    if (to_string(s) == text) return s;
  }
  throw InvalidArgument("unknown suite '" + std::string(text) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Constants: return "constants";
    case Suite::Modes: return "modes";
    case Suite::Lemmas: return "lemmas";
    case Suite::Equivalence: return "equivalence";
    case Suite::Radial: return "radial";
    case Suite::Witnesses: return "witnesses";
    case Suite::Spectra: return "spectra";
    case Suite::Scan: return "scan";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<Check> criterion_checks(int criterion, const Config& config) {
  switch (criterion) {
    case 1: return exact_constants();
    case 2: return positivity_knife_edge();
    case 3: return mode_minimization();
    case 4: return family_convergence();
    case 5: return equivalence();
    case 6: return radial_identity();
    case 7: return witnesses();
    case 8: return lemmas(config);
    case 9: return spectra(config);
    case 10: return scan_strip(config);
    default: throw InvalidArgument("criterion must be in 1..10");
  }
}

std::vector<int> suite_criteria(Suite s) {
  switch (s) {
    case Suite::Constants: return {1, 2, 3, 4};
    case Suite::Modes: return {3, 4};
    case Suite::Lemmas: return {8};
    case Suite::Equivalence: return {5};
    case Suite::Radial: return {6};
    case Suite::Witnesses: return {7};
    case Suite::Spectra: return {9};
    case Suite::Scan: return {10};
    case Suite::All: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  }
  return {};
}

std::vector<Check> run_suite(Suite s, const Config& config) {
  std::vector<Check> out;
  for (int c : suite_criteria(s)) {
    std::vector<Check> part = criterion_checks(c, config);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace rellich
