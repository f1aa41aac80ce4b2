#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cclab/bitstring.hpp"
#include "cclab/compress.hpp"
#include "cclab/oracle.hpp"

namespace cclab {

/// t(n) = a*n^b + c, in machine steps. Nondecreasing for a, b, c >= 0.
struct TimeBound {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  std::uint64_t eval(std::size_t n) const;
};

/// C^t(x) with t the given bound evaluated at |x|.
ComplexityRecord ct_complexity(const BitString& x, TimeBound t, Oracle& oracle);

struct FgFailure {
  BitString x;
  std::uint64_t steps = 0;
  std::uint64_t bound = 0;
};

/// Time-bounded compression contract check. The g side (decompression
/// within g(|x|) steps) is measured for every compressor; the f side
/// (compression within f(|x|) steps) is machine-measurable only for
/// program-backed compressors, and is reported as not modeled otherwise.
struct FgReport {
  std::string compressor;
  TimeBound f, g;
  std::vector<std::size_t> lengths;
  std::uint64_t strings_checked = 0;
  bool g_pass = true;
  std::uint64_t g_fail_count = 0;
  std::vector<FgFailure> g_failures;  // first few, for the report
  bool f_modeled = false;
  bool f_pass = true;
  std::uint64_t f_fail_count = 0;
  std::vector<FgFailure> f_failures;
};

FgReport fg_check(const Compressor& c, TimeBound f, TimeBound g, std::span<const std::size_t> lengths);

/// Periodic expander: the seed repeated cyclically to out_len bits.
/// Requires 1 <= |seed| < out_len. Its outputs have small time-bounded
/// complexity, which is exactly what the distinguisher exploits.
BitString prg_expand(const BitString& seed, std::size_t out_len);

/// 0 iff the compressor shortens x below |x|, 1 otherwise.
int distinguisher_T(const Compressor& c, const BitString& x);

struct DistinguisherReport {
  std::string compressor;
  std::size_t seed_len = 0;
  std::size_t out_len = 0;
  std::uint64_t trials = 0;
  std::uint64_t rng_seed = 0;
  std::string rng_algorithm;  // "splitmix64"
  std::uint64_t accept_count_uniform = 0;
  std::uint64_t accept_count_prg = 0;
  double accept_rate_uniform = 0.0;
  double accept_rate_prg = 0.0;
  double advantage = 0.0;
};

/// Acceptance rate of T on uniform strings of out_len bits versus on
/// expander outputs from uniform seed_len-bit seeds. Each trial's bits are
/// derived from (rng_seed, stream, trial) alone, so runs are reproducible
/// and order-independent.
DistinguisherReport run_distinguisher(const Compressor& c, std::size_t seed_len, std::size_t out_len,
                                      std::uint64_t trials, std::uint64_t rng_seed);

/// Deterministic bits for one distinguisher trial (stream 0 draws the
/// uniform string, stream 1 the seed). Exposed for tests.
BitString trial_bits(std::uint64_t rng_seed, std::uint32_t stream, std::uint64_t trial, std::size_t len);

/// An enumeration q_0, q_1, ... of per-length compressors with a declared
/// size bound; uniform when one rule produces all of them.
struct CompressorFamily {
  std::string name;
  std::function<Compressor(std::size_t)> generator;
  std::function<std::size_t(std::size_t)> size_bound;
};

/// The family q_n = c for all n (uniform).
CompressorFamily uniform_family(const Compressor& c);

/// Every q_n is a compression function at its own length, exhaustively.
bool family_check(const CompressorFamily& fam, std::span<const std::size_t> lengths);

}  // namespace cclab
