#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cclab/bitstring.hpp"
#include "cclab/errors.hpp"
#include "cclab/vm.hpp"

namespace cclab {

/// Plain program complexity C(x): value is the length of the shortlex-first
/// program whose evaluation outputs x. With a step budget set, the witness
/// is additionally required to halt within the budget; when nothing within
/// the Print bound |x|+2 fits the budget, the record carries the Print
/// program with exceeds_budget set.
struct ComplexityRecord {
  BitString x;
  std::size_t value = 0;
  BitString witness;
  std::optional<std::uint64_t> step_budget;
  bool exceeds_budget = false;
};

struct BBRecord {
  std::size_t m = 0;
  std::uint64_t bb = 0;   // max halting steps over all programs of length <= m
  BitString p_m;          // shortlex-least maximizer
};

/// Strings of length `len` that no program shorter than `len` outputs
/// within `s` steps. Members are sorted and never empty.
struct ASet {
  std::uint64_t s = 0;
  std::size_t len = 0;
  std::vector<BitString> members;

  /// Canonical index: newline-separated sorted members.
  std::string canonical_serialization() const;
};

struct IncompressibleFraction {
  std::uint64_t count = 0;  // strings of the length with C(x) >= |x|
  std::size_t length = 0;   // denominator is 2^length
  double value() const { return static_cast<double>(count) / static_cast<double>(1ull << length); }
  std::string str() const;
};

/// Exhaustive-enumeration oracles over the machine, sharing one memo table
/// of u_eval runs. All results are deterministic; requests beyond the
/// configured ceilings raise RefusalError instead of running away.
/// Queries mutate the memo table, so share one instance per thread.
class Oracle {
 public:
  struct Ceilings {
    std::size_t complexity_max_len = 18;  // |x| for C(x) / C^t(x)
    std::size_t bb_max_m = 14;
    std::size_t aset_max_len = 14;
    std::size_t random_max_len = 14;
  };

  Oracle() = default;
  explicit Oracle(Ceilings c) : ceilings_(c) {}

  const Ceilings& ceilings() const { return ceilings_; }

  /// What the run table records about one uncapped u_eval.
  struct RunResult {
    BitString output;
    std::uint64_t steps = 0;
  };

  /// u_eval with no cap, memoized for programs short enough to table.
  RunResult run(const BitString& s);

  ComplexityRecord complexity(const BitString& x);
  ComplexityRecord complexity_time_bounded(const BitString& x, std::uint64_t budget);
  BBRecord busy_beaver(std::size_t m);
  ASet a_set(std::uint64_t s, std::size_t len);
  std::vector<BitString> random_strings(std::size_t len);
  IncompressibleFraction incompressible_fraction(std::size_t n);

  /// Shortlex-first program producing x with steps <= budget (no budget:
  /// unbounded), restricted to |p| <= max_len. nullopt when none exists in
  /// range. Shared by complexity() and the dovetailing compressor.
  struct Producer {
    BitString program;
    std::uint64_t steps;
  };
  std::optional<Producer> first_producer(const BitString& x, std::size_t max_len,
                                         std::optional<std::uint64_t> budget);

  /// Run-table persistence. Format: one header line "cclab-run-cache v1",
  /// then `program TAB output TAB steps` per line in shortlex order, "_"
  /// for the empty string. Loading keeps the longest complete prefix.
  void save_cache(const std::string& path) const;
  void load_cache(const std::string& path);

 private:
  struct RunRecord {
    BitString output;
    std::uint64_t steps;
  };
  struct FrontierEntry {
    std::uint64_t rank;   // shortlex rank of the producing program
    std::uint64_t steps;  // strictly decreasing along each frontier
  };

  void ensure_runs(std::size_t max_len);
  void ensure_producers(std::size_t max_len);

  Ceilings ceilings_;
  std::vector<RunRecord> runs_;  // indexed by shortlex rank
  int runs_len_ = -1;            // lengths 0..runs_len_ covered
  std::unordered_map<BitString, std::vector<FrontierEntry>> producers_;
  int producers_len_ = -1;
};

}  // namespace cclab
