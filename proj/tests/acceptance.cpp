// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <cstdio>
#include <string>

#include "rellich/config.hpp"
#include "rellich/verify.hpp"

int main() {
  const rellich::Config config = rellich::resolve_config(std::nullopt);
  int failed = 0;
  for (int c = 1; c <= 10; ++c) {
    const auto checks = rellich::criterion_checks(c, config);
    std::string first_failure;
    std::size_t bad = 0;
    for (const auto& k : checks) {
      if (k.passed) continue;
      if (bad++ == 0) first_failure = k.name + (k.detail.empty() ? "" : ": " + k.detail);
    }
    const bool ok = bad == 0 && !checks.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %zu/%zu checks%s%s\n", ok ? "PASS" : "FAIL", c, checks.size() - bad,
                checks.size(), ok ? "" : "; first failure: ", first_failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
