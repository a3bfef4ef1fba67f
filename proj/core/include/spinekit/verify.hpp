#pragma once

#include <string>
#include <vector>

namespace spinekit {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// When set, criteria 1-2 read g5.ograph / g9.ograph from this directory
  /// instead of the built-in generator.
  std::string fixture_dir;
};

/// Runs the full verification suite (the acceptance criteria for the claims
/// in docs/claims.md) and returns one result per criterion. Deterministic.
std::vector<CriterionResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// One line per criterion: "PASS <n> <name>  <detail>". Timing is included
/// only on request so that repeated runs print identical text.
std::string format_results(const std::vector<CriterionResult>& results,
                           bool include_timing = false);

}  // namespace spinekit
