#pragma once

#include <string>
#include <vector>

namespace vbsge {

/// One entry of the self-check suite.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string details;
};

/// Run check `id` (1..10). Throws on unknown id.
CheckResult run_check(int id);

/// Run the whole suite in order.
std::vector<CheckResult> run_all_checks();

inline constexpr int kCheckCount = 10;

/// Compares the transfer-matrix value of the averaged-OBC s=2 overlap
/// against candidate closed-form readings, for both sectors. Returned as a
/// human-readable report.
std::string closed_form_report();

}  // namespace vbsge
