#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rellich/cylinder.hpp"
#include "rellich/params.hpp"
#include "rellich/rational.hpp"
#include "rellich/scan.hpp"
#include "rellich/spectra.hpp"

namespace rellich {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(std::string_view text);

/// 17 significant digits (round-trips every double).
std::string format_real(double v);
/// JSON string literal with escapes.
std::string json_string(std::string_view s);
/// JSON number (17 digits) or null for absent / non-finite values.
std::string json_real(std::optional<double> v);

struct ConstantSummary {
  int n = 0;
  Rational alpha;
  std::string domain;
  ConstantReport report;
  std::string delta_rad_exact;
  std::optional<std::string> M_exact;         ///< full sphere only
  std::optional<std::string> critical_exact;  ///< full sphere only
};

ConstantSummary summarize_constant(int n, const Rational& alpha, const Spectrum& spectrum,
                                   double membership_tol = 1e-9);

std::string render_constant(const ConstantSummary& s, OutputFormat format);

/// CSV header: alpha,delta_rad,M,numeric_delta,regime,certified.
std::string render_scan(const std::vector<ScanRow>& rows, OutputFormat format);

std::string render_spectrum(const Spectrum& spectrum, std::size_t count, OutputFormat format);

struct TransformRow {
  std::string name;
  int n = 0;
  double alpha = 0.0;
  int mode = 0;
  EquivalenceReport result;
};

std::string render_transform(const std::vector<TransformRow>& rows, OutputFormat format);

}  // namespace rellich
