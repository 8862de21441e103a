#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace sdim {

/// One exact comparison inside the acceptance battery.
struct CheckResult {
  std::string id;           // e.g. "07.gq_full.q3.sdim_f"
  int criterion = 0;        // 1..20
  std::string expected;
  std::string computed;
  std::string citation;     // statement of the result being checked
  bool passed = false;
};

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Directory receiving an edge-list fixture for every failing graph.
  /// Empty disables archiving.
  std::string archive_dir = "verify-failures";
  /// Restrict to these criteria (empty = all).
  std::vector<int> only;
  /// Random connected graphs in the property suite.
  std::size_t property_corpus_size = 500;
  /// Called after each criterion completes.
  std::function<void(const CriterionSummary&)> on_criterion;
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by id
  std::vector<CriterionSummary> criteria;
  bool all_passed() const;
};

/// Runs the closed-form battery (criteria 1..20). Deterministic.
VerifyReport run_verify_suite(const VerifyOptions& options = {});

std::string render_verify_table(const VerifyReport& report);

}  // namespace sdim
