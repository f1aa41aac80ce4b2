// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. The criteria themselves live in the library (cclab/acceptance.hpp)
// and are also reachable through `cclab acceptance`.

#include <chrono>
#include <cstdio>

#include "cclab/acceptance.hpp"

int main() {
  auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  for (const cclab::CriterionResult& r : cclab::run_acceptance()) {
    std::printf("criterion %d: %s - %s\n", r.id, r.pass ? "PASS" : "FAIL", r.detail.c_str());
    all = all && r.pass;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s (%.1fs)\n", all ? "all criteria passed" : "SOME CRITERIA FAILED", secs);
  return all ? 0 : 1;
}
