#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asymq {

struct PropertyResult {
  std::string suite;
  std::string name;
  int trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct DiscrepancyItem {
  std::string name;
  std::string detail;
};

struct SuiteReport {
  std::vector<PropertyResult> results;
  /// Fixed ledger of measured facts that contradict commonly stated claims
  /// about these quantities. Informational: they never fail a run.
  std::vector<DiscrepancyItem> discrepancies;

  bool all_passed() const;
};

std::vector<std::string> property_suite_names();

/// Runs the invariant suites. `selector` is "all" or one suite name; `trials`
/// scales the sample counts; runs are deterministic per seed.
SuiteReport run_property_suite(const std::string& selector, int trials,
                               std::uint64_t seed);

}  // namespace asymq
