#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/report_json.hpp"

namespace cclab {

// The acceptance scenarios behind both the test binary and the CLI's
// `acceptance` subcommand. Each criterion is a self-contained run that
// produces a pass flag, a one-line summary, and a deterministic payload.

struct CriterionResult {
  int id = 0;
  bool pass = true;
  std::string detail;
  json payload;
};

/// Run one criterion (1..9). Criterion 9 reruns 1-8 twice and compares
/// payload bytes.
CriterionResult run_criterion(int id);

/// All criteria in order; with `only`, just that one.
std::vector<CriterionResult> run_acceptance(std::optional<int> only = std::nullopt);

}  // namespace cclab
