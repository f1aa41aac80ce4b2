#include "cclab/vm.hpp"

#include <sstream>
#include <vector>

namespace cclab {

const char* halt_reason_name(HaltReason r) {
  switch (r) {
    case HaltReason::Normal: return "NORMAL";
    case HaltReason::Graceful: return "GRACEFUL";
    case HaltReason::CapExceeded: return "CAP_EXCEEDED";
  }
  return "?";
}

const char* opcode_name(Opcode k) {
  switch (k) {
    case Opcode::LitRest: return "LIT_REST";
    case Opcode::EmitRun: return "EMIT_RUN";
    case Opcode::CopyBack: return "COPY_BACK";
    case Opcode::InputRest: return "INPUT_REST";
    case Opcode::LitChunk: return "LIT_CHUNK";
    case Opcode::Loop: return "LOOP";
    case Opcode::Halt: return "HALT";
  }
  return "?";
}

BitString gamma_code(std::uint64_t n) {
  assert(n >= 1);
  std::size_t b = 0;
  while ((n >> b) != 0) ++b;  // bit width of n
  BitString out;
  out.reserve(2 * b - 1);
  for (std::size_t i = 0; i + 1 < b; ++i) out.push_back(0);
  for (std::size_t i = 0; i < b; ++i) out.push_back(static_cast<int>((n >> (b - 1 - i)) & 1));
  return out;
}

std::optional<GammaDecode> gamma_decode(const BitString& s, std::size_t pos) {
  std::size_t zeros = 0;
  while (pos + zeros < s.size() && s.bit(pos + zeros) == 0) ++zeros;
  std::size_t b = zeros + 1;
  if (pos + zeros >= s.size()) return std::nullopt;  // ran out before the leading 1
  if (b > 63) return std::nullopt;                   // value would not fit a machine word
  if (pos + zeros + b > s.size()) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < b; ++i) v = (v << 1) | static_cast<std::uint64_t>(s.bit(pos + zeros + i));
  return GammaDecode{v, pos + zeros + b};
}

BitString pair_encode(const BitString& x, const BitString& y) {
  BitString out;
  out.reserve(2 * x.size() + 1 + y.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(1);
  out.push_back(0);
  out.append(x);
  out.append(y);
  return out;
}

std::optional<std::pair<BitString, BitString>> pair_parse(const BitString& s) {
  std::size_t a = 0;
  while (a < s.size() && s.bit(a) == 1) ++a;
  if (a == 0 || a >= s.size()) return std::nullopt;  // no leading 1s, or no separating 0
  std::size_t rest = a + 1;
  if (s.size() - rest < a) return std::nullopt;  // remainder shorter than |p|
  return std::make_pair(s.slice(rest, a), s.slice(rest + a, s.size() - rest - a));
}

std::optional<DecodedInstruction> decode_instruction(const BitString& p, std::size_t pos) {
  const std::size_t n = p.size();
  assert(pos < n);
  const std::size_t start = pos;
  if (pos + 1 >= n) return std::nullopt;  // lone bit: truncated opcode
  int b0 = p.bit(pos), b1 = p.bit(pos + 1);
  Instruction ins;
  if (b0 == 0 && b1 == 0) {
    ins.kind = Opcode::LitRest;
    ins.payload = p.slice(pos + 2, n - pos - 2);
    ins.bit_width = n - start;
    return DecodedInstruction{std::move(ins), n};
  }
  if (b0 == 0 && b1 == 1) {
    if (pos + 2 >= n) return std::nullopt;
    ins.kind = Opcode::EmitRun;
    ins.a = static_cast<std::uint64_t>(p.bit(pos + 2));
    auto g = gamma_decode(p, pos + 3);
    if (!g) return std::nullopt;
    ins.b = g->value;
    ins.bit_width = g->next_pos - start;
    return DecodedInstruction{std::move(ins), g->next_pos};
  }
  if (b0 == 1 && b1 == 0) {
    ins.kind = Opcode::CopyBack;
    auto gd = gamma_decode(p, pos + 2);
    if (!gd) return std::nullopt;
    auto gl = gamma_decode(p, gd->next_pos);
    if (!gl) return std::nullopt;
    ins.a = gd->value;
    ins.b = gl->value;
    ins.bit_width = gl->next_pos - start;
    return DecodedInstruction{std::move(ins), gl->next_pos};
  }
  // 11xx
  if (pos + 3 >= n) return std::nullopt;
  int b2 = p.bit(pos + 2), b3 = p.bit(pos + 3);
  pos += 4;
  if (b2 == 0 && b3 == 0) {
    ins.kind = Opcode::InputRest;
    ins.bit_width = 4;
    return DecodedInstruction{std::move(ins), pos};
  }
  if (b2 == 0 && b3 == 1) {
    ins.kind = Opcode::LitChunk;
    auto g = gamma_decode(p, pos);
    if (!g) return std::nullopt;
    std::uint64_t len = g->value;
    if (n - g->next_pos < len) return std::nullopt;  // payload truncated
    ins.payload = p.slice(g->next_pos, static_cast<std::size_t>(len));
    std::size_t next = g->next_pos + static_cast<std::size_t>(len);
    ins.bit_width = next - start;
    return DecodedInstruction{std::move(ins), next};
  }
  if (b2 == 1 && b3 == 0) {
    ins.kind = Opcode::Loop;
    auto gc = gamma_decode(p, pos);
    if (!gc) return std::nullopt;
    auto gL = gamma_decode(p, gc->next_pos);
    if (!gL) return std::nullopt;
    ins.a = gc->value;
    ins.b = gL->value;
    ins.bit_width = gL->next_pos - start;
    return DecodedInstruction{std::move(ins), gL->next_pos};
  }
  ins.kind = Opcode::Halt;
  ins.bit_width = 4;
  return DecodedInstruction{std::move(ins), pos};
}

BitString Instruction::encode() const {
  BitString out;
  switch (kind) {
    case Opcode::LitRest:
      out = BitString::parse("00");
      out.append(payload);
      break;
    case Opcode::EmitRun:
      out = BitString::parse("01");
      out.push_back(static_cast<int>(a));
      out.append(gamma_code(b));
      break;
    case Opcode::CopyBack:
      out = BitString::parse("10");
      out.append(gamma_code(a));
      out.append(gamma_code(b));
      break;
    case Opcode::InputRest:
      out = BitString::parse("1100");
      break;
    case Opcode::LitChunk:
      out = BitString::parse("1101");
      out.append(gamma_code(payload.size()));
      out.append(payload);
      break;
    case Opcode::Loop:
      out = BitString::parse("1110");
      out.append(gamma_code(a));
      out.append(gamma_code(b));
      break;
    case Opcode::Halt:
      out = BitString::parse("1111");
      break;
  }
  return out;
}

namespace {

constexpr std::size_t kMaxLoopDepth = 8;

struct LoopFrame {
  std::size_t block_start;
  std::size_t block_end;
  std::uint64_t remaining;
};

}  // namespace

ExecResult exec(const BitString& program, const BitString& input, std::optional<std::uint64_t> cap) {
  ExecResult r;
  r.output.reserve(16);
  std::size_t pos = 0;
  std::size_t inpos = 0;
  std::vector<LoopFrame> frames;

  // One accounting unit: dispatch or appended bit. False when the cap is hit.
  auto tick = [&]() -> bool {
    if (cap && r.steps >= *cap) return false;
    ++r.steps;
    return true;
  };

  while (true) {
    while (!frames.empty() && pos >= frames.back().block_end) {
      LoopFrame& f = frames.back();
      if (--f.remaining > 0) {
        pos = f.block_start;
      } else {
        pos = f.block_end;
        frames.pop_back();
      }
    }
    if (pos >= program.size()) return r;  // ran off the end: normal halt

    auto dec = decode_instruction(program, pos);
    if (!dec) {
      r.halt_reason = HaltReason::Graceful;
      return r;
    }
    const Instruction& ins = dec->instr;
    switch (ins.kind) {
      case Opcode::LitRest: {
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        for (std::size_t i = 0; i < ins.payload.size(); ++i) {
          if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
          r.output.push_back(ins.payload.bit(i));
        }
        return r;  // global halt
      }
      case Opcode::EmitRun: {
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        for (std::uint64_t i = 0; i < ins.b; ++i) {
          if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
          r.output.push_back(static_cast<int>(ins.a));
        }
        pos = dec->next_pos;
        break;
      }
      case Opcode::CopyBack: {
        if (ins.a > r.output.size()) {
          r.halt_reason = HaltReason::Graceful;
          return r;
        }
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        std::size_t base = r.output.size() - static_cast<std::size_t>(ins.a);
        for (std::uint64_t i = 0; i < ins.b; ++i) {
          if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
          r.output.push_back(r.output.bit(base + static_cast<std::size_t>(i)));
        }
        pos = dec->next_pos;
        break;
      }
      case Opcode::InputRest: {
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        while (inpos < input.size()) {
          if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
          r.output.push_back(input.bit(inpos++));
        }
        pos = dec->next_pos;
        break;
      }
      case Opcode::LitChunk: {
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        for (std::size_t i = 0; i < ins.payload.size(); ++i) {
          if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
          r.output.push_back(ins.payload.bit(i));
        }
        pos = dec->next_pos;
        break;
      }
      case Opcode::Loop: {
        std::size_t block_start = dec->next_pos;
        if (block_start + ins.b > program.size() || frames.size() >= kMaxLoopDepth) {
          r.halt_reason = HaltReason::Graceful;
          return r;
        }
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        frames.push_back(LoopFrame{block_start, block_start + static_cast<std::size_t>(ins.b), ins.a});
        pos = block_start;
        break;
      }
      case Opcode::Halt: {
        if (!tick()) { r.halt_reason = HaltReason::CapExceeded; return r; }
        return r;
      }
    }
  }
}

ExecResult u_eval(const BitString& s, std::optional<std::uint64_t> cap) {
  if (auto px = pair_parse(s)) return exec(px->first, px->second, cap);
  return exec(s, BitString(), cap);
}

std::string disassemble(const BitString& program) {
  std::ostringstream out;
  std::size_t pos = 0;
  while (pos < program.size()) {
    auto dec = decode_instruction(program, pos);
    if (!dec) {
      out << pos << ": TRUNCATED \"" << program.slice(pos, program.size() - pos).str() << "\"\n";
      break;
    }
    const Instruction& ins = dec->instr;
    out << pos << ": " << opcode_name(ins.kind);
    switch (ins.kind) {
      case Opcode::LitRest:
      case Opcode::LitChunk:
        out << " \"" << ins.payload.str() << "\"";
        break;
      case Opcode::EmitRun:
        out << " b=" << ins.a << " c=" << ins.b;
        break;
      case Opcode::CopyBack:
        out << " d=" << ins.a << " l=" << ins.b;
        break;
      case Opcode::Loop:
        out << " c=" << ins.a << " L=" << ins.b;
        break;
      case Opcode::InputRest:
      case Opcode::Halt:
        break;
    }
    out << "\n";
    pos = dec->next_pos;
  }
  return out.str();
}

}  // namespace cclab
