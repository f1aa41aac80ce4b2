#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cclab/bitstring.hpp"
#include "cclab/compress.hpp"
#include "cclab/oracle.hpp"

namespace cclab {

// Executable checks of the two compression-tradeoff statements this lab is
// built around, on exhaustively verifiable instances:
//
//  Upper bound (theorem 1): for every m there is a compression function q
//  of about m bits with |q(x)| = C(x) whenever C(x) <= m, and
//  |q(x)| <= |x| + k otherwise; consequently |q(x)| - C(x) <= |x| - m + k
//  for |x| >= m.
//
//  Lower bound (theorem 2 here, items 1-4): for m <= n the lexicographically
//  first string x of length n that no short program produces within BB(m)
//  steps satisfies |x| = n and C(x) <= m + k log2 n, yet every compression
//  function for length n that is much shorter than m fails to compress x at
//  all. The testable mechanism: any genuine compression function with
//  |q(x)| < n must decompress x in more than BB(m) steps.

struct Thm1Entry {
  BitString x;
  std::size_t c = 0;      // C(x)
  std::size_t q_len = 0;  // |q_m(x)|
  int case_taken = 0;     // 1: C(x) <= m, 2: otherwise
  bool ok = false;
};

struct Thm1Report {
  std::size_t m = 0;
  std::size_t n_max = 0;
  bool pass = false;
  std::vector<Thm1Entry> per_x;
  std::size_t case1_count = 0;
  std::size_t case2_count = 0;
  std::int64_t corollary_slack = 0;  // max over |x| >= m of (|q(x)|-C(x)) - (|x|-m)
  std::size_t k_print = kPrintBits;  // constant used in the case-2 bound
  std::size_t declared_length = 0;   // |p_m| + k_driver
  std::size_t k_min_statement = 0;   // smallest k making |q|<=m+k and case 2 hold here
};

struct Thm2Violation {
  BitString q;
  std::size_t out_len = 0;        // |q(x_adv)| < n
  std::uint64_t decomp_steps = 0; // steps of u_eval(q(x_adv))
};

struct Thm2Report {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q_len_max = 0;
  std::uint64_t t = 0;  // BB(m)
  BitString x_adv;
  std::size_t c_x_adv = 0;
  std::size_t cf_count = 0;  // genuine compression functions for length n with |q| <= q_len_max
  std::vector<Thm2Violation> violations;  // shortlex by q
  bool mechanism_pass = false;  // every violation decompresses in > t steps
  bool degenerate = false;      // n <= 1: log2 n vanishes, size bounds are vacuous
  // Smallest integer constants making items 2-4 hold on this instance
  // (meaningless when degenerate).
  std::size_t k_min_item2 = 0;
  std::size_t k_min_item3 = 0;
  std::size_t k_min_item4 = 0;
  std::size_t k_min_items = 0;
  bool pass = false;
};

/// Lexicographically first string of length n that no program shorter than
/// n outputs within BB(m) steps.
BitString adversarial_string(std::size_t m, std::size_t n, Oracle& oracle);

Thm1Report verify_theorem1(std::size_t m, std::size_t n_max, Oracle& oracle);

Thm2Report verify_theorem2(std::size_t m, std::size_t n, std::size_t q_len_max, Oracle& oracle);

struct ExtractRandomResult {
  BitString z;             // least member of the A-set at t'
  std::uint64_t t_prime;   // max decompression steps over all length-n inputs
  std::uint64_t bb_m;
  bool contract_applies;   // t' >= BB(m): z must be the least random string of length m
};

/// The random-string extraction reduction: given a compression function q
/// for length n, bound decompression time over all length-n strings and
/// read the least surviving string of length m out of that A-set.
ExtractRandomResult extract_random(const Compressor& q, std::size_t n, std::size_t m, Oracle& oracle);

/// Smallest constants making both statements hold across a grid of (m, n)
/// instances (theorem 1 is checked with n_max = n).
MeasuredConstants estimate_constants(const std::vector<std::pair<std::size_t, std::size_t>>& grid,
                                     std::size_t q_len_max, Oracle& oracle);

}  // namespace cclab
