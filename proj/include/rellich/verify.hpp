#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rellich/config.hpp"

namespace rellich {

/// One named pass/fail check, tagged with the acceptance criterion (1-10)
/// it belongs to.
struct Check {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { Constants, Modes, Lemmas, Equivalence, Radial, Witnesses, Spectra, Scan, All };

/// constants | modes | lemmas | equivalence | radial | witnesses | spectra | scan | all
Suite parse_suite(std::string_view text);
std::string_view to_string(Suite s);

/// Checks for a single acceptance criterion. A check that throws is
/// recorded as failed with the exception text as detail.
std::vector<Check> criterion_checks(int criterion, const Config& config = {});

/// Criteria covered by a suite (`constants` covers 1-4, `modes` 3-4).
std::vector<int> suite_criteria(Suite s);

std::vector<Check> run_suite(Suite s, const Config& config = {});

bool all_passed(const std::vector<Check>& checks);

}  // namespace rellich
