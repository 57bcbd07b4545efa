#pragma once

// Verification suites run over a (d, k) grid, producing one JSON report.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fibdig/errors.hpp"

namespace fibdig {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

struct Caps {
  std::size_t vertices = 1'000'000;
  std::size_t char_poly = caps::kCharPolyOrder;
  std::uint64_t cycle_budget = caps::kCycleWorkBudget;
  std::size_t isomorphism = caps::kIsomorphismOrder;
};

struct VerifyOptions {
  std::vector<int> ds;
  int k_min = 1;
  int k_max = 1;
  /// Empty means every suite.
  std::set<std::string> suites;
  Caps caps;
};

/// Names accepted by --suite, in the order they run.
const std::vector<std::string>& suite_names();

/// Runs the selected suites. The report's top-level "passed" is true iff no
/// check failed; checks beyond a cap are recorded as "skipped".
nlohmann::json run_verification(const VerifyOptions& options);

}  // namespace fibdig
