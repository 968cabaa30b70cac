#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>

namespace rellich {

/// Resolution and tolerance settings shared by the CLI and verify suites.
///
/// File format: one `key = value` per line, `#` comments. Keys match the
/// field names below (L, N, k_max, m_max, cap_grid, cap_tol, tol_bound,
/// tol_residual, tol_membership, spectrum_count, threads).
struct Config {
  double L = 100.0;             ///< mode grid half-length
  std::size_t N = 8000;         ///< mode grid points
  int k_max = 4;                ///< modes per alpha in numeric scans
  int m_max = 8;                ///< cap azimuthal cutoff
  std::size_t cap_grid = 2048;
  double cap_tol = 1e-5;
  double tol_bound = 1e-3;
  double tol_residual = 1e-10;
  double tol_membership = 1e-9;
  std::size_t spectrum_count = 16;
  unsigned threads = 0;         ///< 0 = hardware concurrency

  /// Sets one key from its textual value; throws InvalidArgument on an
  /// unknown key or malformed value.
  void set(const std::string& key, const std::string& value);
};

/// Applies every line of `in` on top of `base`.
Config parse_config(std::istream& in, Config base = {});
Config load_config(const std::string& path, Config base = {});

/// Name of the environment variable holding the default config path.
inline constexpr const char* kConfigEnv = "RELLICH_CONFIG";

/// Explicit path if given, else $RELLICH_CONFIG if set, else defaults.
Config resolve_config(const std::optional<std::string>& path);

}  // namespace rellich
