#include "rellich/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "rellich/errors.hpp"
#include "rellich/mode_opt.hpp"

namespace rellich {

std::vector<Rational> alpha_grid(const Rational& from, const Rational& to, const Rational& step) {
  if (step <= 0) throw InvalidArgument("scan step must be positive");
  if (to < from) throw InvalidArgument("scan range is empty (alpha-to < alpha-from)");
  std::vector<Rational> out;
  for (Rational a = from; a <= to; a += step) {
    out.push_back(a);
    if (out.size() > 1000000) throw InvalidArgument("scan grid exceeds 10^6 rows");
  }
  return out;
}

std::optional<double> numeric_delta(const Params& p, const Spectrum& spectrum,
                                    const std::optional<double>& argmin_lambda,
                                    const Config& config) {
  std::vector<double> lambdas = spectrum.first(static_cast<std::size_t>(config.k_max) + 1);
  if (argmin_lambda &&
      std::find(lambdas.begin(), lambdas.end(), *argmin_lambda) == lambdas.end()) {
    lambdas.push_back(*argmin_lambda);
  }
  SolverOptions opts;
  opts.residual_tolerance = config.tol_residual;
  std::optional<double> best;
  for (double lambda : lambdas) {
    if (!(p.C + lambda > 0.0)) continue;
    const ModeProblem prob = ModeProblem::from(p, lambda, ModeGrid{config.L, config.N});
    const double v = minimize_mode(prob, opts).value;
    if (!best || v < *best) best = v;
  }
  return best;
}

ScanRow scan_row(int n, const Rational& alpha, const Spectrum& spectrum, bool with_numeric,
                 const Config& config) {
  const Params p = derive(n, alpha);
  const ConstantReport r = classify(p, spectrum, config.tol_membership);
  ScanRow row;
  row.alpha_exact = alpha;
  row.alpha = p.alpha;
  row.delta_rad = r.delta_rad;
  row.M = r.M;
  row.critical = r.critical;
  row.certified = r.certified();
  row.regime = row.certified ? std::string(to_string(r.regime)) : "Uncertified";
  if (with_numeric) row.numeric_delta = numeric_delta(p, spectrum, r.argmin_lambda, config);
  return row;
}

ScanResult run_scan(int n, const std::vector<Rational>& alphas, const Spectrum& spectrum,
                    bool with_numeric, const Config& config) {
  const std::size_t count = alphas.size();
  std::vector<std::optional<ScanRow>> rows(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = scan_row(n, alphas[i], spectrum, with_numeric, config);
      } catch (const std::exception& e) {
        errors[i] = e.what();
        if (errors[i].empty()) errors[i] = "unknown error";
      }
    }
  };
  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ScanResult out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!rows[i]) {
      out.error = errors[i];
      out.failed_alpha = alphas[i];
      break;
    }
    out.rows.push_back(std::move(*rows[i]));
  }
  return out;
}

}  // namespace rellich
