#include "rellich/config.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw InvalidArgument("config " + key + ": not a number: " + v);
  return out;
}

long long to_integer(const std::string& key, const std::string& v, long long min) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw InvalidArgument("config " + key + ": not an integer: " + v);
  if (out < min) throw InvalidArgument("config " + key + " must be >= " + std::to_string(min));
  return out;
}

double positive(const std::string& key, const std::string& v) {
  const double x = to_real(key, v);
  if (!(x > 0.0)) throw InvalidArgument("config " + key + " must be positive");
  return x;
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
  if (key == "L") {
    L = positive(key, value);
  } else if (key == "N") {
    N = static_cast<std::size_t>(to_integer(key, value, 3));
  } else if (key == "k_max") {
    k_max = static_cast<int>(to_integer(key, value, 0));
  } else if (key == "m_max") {
    m_max = static_cast<int>(to_integer(key, value, 0));
  } else if (key == "cap_grid") {
    cap_grid = static_cast<std::size_t>(to_integer(key, value, 16));
  } else if (key == "cap_tol") {
    cap_tol = positive(key, value);
  } else if (key == "tol_bound") {
    tol_bound = positive(key, value);
  } else if (key == "tol_residual") {
    tol_residual = positive(key, value);
  } else if (key == "tol_membership") {
    tol_membership = positive(key, value);
  } else if (key == "spectrum_count") {
    spectrum_count = static_cast<std::size_t>(to_integer(key, value, 1));
  } else if (key == "threads") {
    threads = static_cast<unsigned>(to_integer(key, value, 0));
  } else {
    throw InvalidArgument("unknown config key '" + key + "'");
  }
}

Config parse_config(std::istream& in, Config base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file " + path);
  return parse_config(in, base);
}

Config resolve_config(const std::optional<std::string>& path) {
  if (path) return load_config(*path);
  if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') {
    return load_config(env);
  }
  return {};
}

}  // namespace rellich
