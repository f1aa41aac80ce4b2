#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cclab/bitstring.hpp"

namespace cclab {

// The machine U: a total, deterministic bit-level interpreter. Programs and
// outputs are bit strings. Opcodes, first match wins:
//
//   00    LIT_REST    append all remaining program bits, then halt
//                     (halts globally, even inside a loop body)
//   01    EMIT_RUN    read bit b, gamma(c); append c copies of b
//   10    COPY_BACK   read gamma(d), gamma(l); append l bits copied from
//                     d bits back in the output (overlap allowed);
//                     d greater than the output length is a graceful halt
//   1100  INPUT_REST  append all unread input bits
//   1101  LIT_CHUNK   read gamma(l), then l raw program bits; append them;
//                     fewer than l remaining is a graceful halt
//   1110  LOOP        read gamma(c), gamma(L); the next L program bits form
//                     a block executed c times; nesting deeper than 8 or a
//                     block past the program end is a graceful halt
//   1111  HALT        stop
//
// Step accounting: +1 per completed instruction dispatch (a LOOP dispatch
// counts once, not per iteration) and +1 per bit appended to the output.
// Truncated opcodes/operands and every graceful-halt condition cost 0
// additional steps and keep the output accumulated so far. Every program
// halts; a supplied step cap stops the run early with CAP_EXCEEDED.

enum class HaltReason { Normal, Graceful, CapExceeded };

const char* halt_reason_name(HaltReason r);

struct ExecResult {
  BitString output;
  std::uint64_t steps = 0;
  HaltReason halt_reason = HaltReason::Normal;

  bool operator==(const ExecResult& o) const {
    return output == o.output && steps == o.steps && halt_reason == o.halt_reason;
  }
};

/// Elias gamma code of n >= 1: 0^(b-1) then the b-bit binary form of n.
BitString gamma_code(std::uint64_t n);

struct GammaDecode {
  std::uint64_t value;
  std::size_t next_pos;
};

/// Decode a gamma code at `pos`. nullopt means the code is truncated at the
/// end of the string (or wider than 63 value bits, which no tractable
/// program can reach).
std::optional<GammaDecode> gamma_decode(const BitString& s, std::size_t pos);

/// <x,y> = 1^|x| 0 x y.
BitString pair_encode(const BitString& x, const BitString& y);

/// Inverse of pair_encode for strings with at least one leading 1: reads
/// a >= 1 ones, a 0, then a-bit p and remainder x. Strings starting with 0
/// (and other malformed shapes) do not parse; u_eval runs those directly
/// as programs, which is what keeps "00"+z the 2-bit Print program.
std::optional<std::pair<BitString, BitString>> pair_parse(const BitString& s);

enum class Opcode { LitRest, EmitRun, CopyBack, InputRest, LitChunk, Loop, Halt };

const char* opcode_name(Opcode k);

struct Instruction {
  Opcode kind = Opcode::Halt;
  std::uint64_t a = 0;  // EMIT_RUN: run bit; COPY_BACK: distance; LOOP: count
  std::uint64_t b = 0;  // EMIT_RUN: count;   COPY_BACK: length;   LOOP: block bits
  BitString payload;    // LIT_REST / LIT_CHUNK
  std::size_t bit_width = 0;

  /// Canonical bit encoding; decoding then re-encoding reproduces the
  /// original bits exactly.
  BitString encode() const;
};

struct DecodedInstruction {
  Instruction instr;
  std::size_t next_pos;
};

/// Decode one instruction at `pos`. nullopt when the opcode, an operand, or
/// a LIT_CHUNK payload is truncated by the program end.
std::optional<DecodedInstruction> decode_instruction(const BitString& program, std::size_t pos);

/// Run `program` on `input`. Total: always returns. With a cap the run
/// stops once `cap` steps have been spent, reporting the capped prefix.
ExecResult exec(const BitString& program, const BitString& input,
                std::optional<std::uint64_t> cap = std::nullopt);

/// U as a function of one string: if s pair-parses as <p,x>, run exec(p,x);
/// otherwise run s directly on empty input.
ExecResult u_eval(const BitString& s, std::optional<std::uint64_t> cap = std::nullopt);

/// One line per instruction: `offset: MNEMONIC operands`. Truncated tails
/// appear as `offset: TRUNCATED "bits"`. Stable format, covered by golden
/// tests; tests/assemble.hpp parses it back.
std::string disassemble(const BitString& program);

}  // namespace cclab
