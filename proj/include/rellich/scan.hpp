#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rellich/config.hpp"
#include "rellich/params.hpp"
#include "rellich/rational.hpp"
#include "rellich/spectra.hpp"

namespace rellich {

struct ScanRow {
  Rational alpha_exact;
  double alpha = 0.0;
  double delta_rad = 0.0;
  std::optional<double> M;
  std::optional<double> critical;
  std::optional<double> numeric_delta;
  std::string regime;  ///< regime name, or "Uncertified" when no theorem applies
  bool certified = false;
};

/// from, from + step, ... up to `to` inclusive, in exact arithmetic.
std::vector<Rational> alpha_grid(const Rational& from, const Rational& to, const Rational& step);

/// min over the first k_max+1 eigenvalues (and the argmin of the mode
/// function) of the discrete mode minimum; modes with C + lambda <= 0 are
/// skipped. Empty if no mode qualifies.
std::optional<double> numeric_delta(const Params& p, const Spectrum& spectrum,
                                    const std::optional<double>& argmin_lambda,
                                    const Config& config);

ScanRow scan_row(int n, const Rational& alpha, const Spectrum& spectrum, bool with_numeric,
                 const Config& config);

struct ScanResult {
  std::vector<ScanRow> rows;          ///< rows before the first failure, in alpha order
  std::optional<std::string> error;   ///< first failure, if any
  std::optional<Rational> failed_alpha;
};

/// Evaluates rows concurrently and returns them in alpha order.
ScanResult run_scan(int n, const std::vector<Rational>& alphas, const Spectrum& spectrum,
                    bool with_numeric, const Config& config);

}  // namespace rellich
