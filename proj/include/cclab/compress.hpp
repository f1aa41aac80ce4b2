#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cclab/bitstring.hpp"
#include "cclab/oracle.hpp"
#include "cclab/vm.hpp"

namespace cclab {

/// A named compression function: compress(x) is a program whose evaluation
/// reproduces x. Program-backed compressors are genuine machine programs
/// (declared_length is the exact bit length, and compress(z) = exec(q, z));
/// host-backed ones run outside the machine and carry a declared length by
/// the driver accounting convention (see kDriverBits).
struct Compressor {
  std::string name;
  std::size_t declared_length = 0;
  std::optional<BitString> backing_program;
  std::function<BitString(const BitString&)> compress;

  bool program_backed() const { return backing_program.has_value(); }
};

/// Driver accounting for host-backed compressors: a nominal 4-bit driver r
/// hardwired as <r, payload>, i.e. 2*|r|+1 = 9 bits on top of the payload.
inline constexpr std::size_t kDriverBits = 9;

/// Print overhead: |literal_compress(x)| - |x|.
inline constexpr std::size_t kPrintBits = 2;

/// The Print program "00"+x.
BitString literal_compress(const BitString& x);

/// Maximal runs as EMIT_RUN instructions; falls back to literal whenever
/// that is not strictly shorter.
BitString rle_compress(const BitString& x);

/// Greedy LZ: longest back-reference (smallest distance on ties), accepted
/// only when the COPY_BACK encoding is strictly shorter than the matched
/// bits; pending literals flush as LIT_CHUNK (LIT_REST at the end), or as
/// EMIT_RUN runs when those encode smaller.
BitString lz_compress(const BitString& x);

/// Shortest of {literal, rle, lz}, ties in that order. Never longer than
/// |x| + 2.
BitString best_compress(const BitString& x);

Compressor make_literal_codec();
Compressor make_rle_codec();
Compressor make_lz_codec();
Compressor make_best_codec();

/// The dovetailing compressor for level m: with t = BB(m), map z to the
/// shortlex-first program of length <= |z| that outputs z within t steps,
/// else to Print z. declared_length is |p_m| + kDriverBits.
Compressor theorem1_compressor(std::size_t m, Oracle& oracle);

/// Wrap a machine program q: compress(z) = exec(q, z) output, declared
/// length exactly |q|. intended_len is advisory metadata only.
Compressor program_as_compressor(const BitString& q, std::size_t intended_len);

/// True iff evaluating c.compress(z) reproduces z for every z of length n.
/// Exhaustive 2^n sweep; n above the ceiling is refused.
bool is_compression_function(const Compressor& c, std::size_t n, std::size_t ceiling = 16);

/// Constants measured on a verification grid.
struct MeasuredConstants {
  std::size_t k_print = kPrintBits;
  std::size_t k_driver = kDriverBits;
  std::size_t k_min_thm1 = 0;
  std::size_t k_min_thm2 = 0;
  std::size_t thm1_witness_m = 0, thm1_witness_n = 0;  // grid point attaining k_min_thm1
  std::size_t thm2_witness_m = 0, thm2_witness_n = 0;
};

}  // namespace cclab
