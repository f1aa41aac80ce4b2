#include "cclab/compress.hpp"

#include <utility>
#include <vector>

namespace cclab {

namespace {

std::size_t gamma_len(std::uint64_t n) {
  std::size_t b = 0;
  while ((n >> b) != 0) ++b;
  return 2 * b - 1;
}

// Maximal runs of x as (bit, count) pairs.
std::vector<std::pair<int, std::uint64_t>> runs_of(const BitString& x) {
  std::vector<std::pair<int, std::uint64_t>> runs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!runs.empty() && runs.back().first == x.bit(i)) {
      ++runs.back().second;
    } else {
      runs.emplace_back(x.bit(i), 1);
    }
  }
  return runs;
}

void emit_run_instruction(BitString& out, int bit, std::uint64_t count) {
  out.push_back(0);
  out.push_back(1);
  out.push_back(bit);
  out.append(gamma_code(count));
}

// Cost in bits of encoding `pending` as EMIT_RUN instructions.
std::size_t run_flush_cost(const std::vector<std::pair<int, std::uint64_t>>& runs) {
  std::size_t cost = 0;
  for (const auto& [bit, count] : runs) cost += 3 + gamma_len(count);
  return cost;
}

void append_chunk(BitString& out, const BitString& payload) {
  out.append(BitString::parse("1101"));
  out.append(gamma_code(payload.size()));
  out.append(payload);
}

// Append the cheaper encoding of the pending literals: one LIT_CHUNK
// (LIT_REST when final) versus per-run EMIT_RUNs. Ties go to the chunk
// form. A program's first instruction must start with a 0 bit or the
// machine's pairing convention hijacks it, so at the start of the output
// the chunk form is EMIT_RUN of the first run followed by a LIT_CHUNK of
// the remainder.
void flush_pending(BitString& out, const BitString& pending, bool final) {
  if (pending.empty()) return;
  auto runs = runs_of(pending);
  std::size_t run_cost = run_flush_cost(runs);
  if (final) {
    // LIT_REST starts "00": always safe, and never beaten by LIT_CHUNK.
    if (run_cost < 2 + pending.size()) {
      for (const auto& [bit, count] : runs) emit_run_instruction(out, bit, count);
    } else {
      out.push_back(0);
      out.push_back(0);
      out.append(pending);
    }
    return;
  }
  if (out.empty()) {
    const auto& first = runs.front();
    BitString rest = pending.slice(static_cast<std::size_t>(first.second),
                                   pending.size() - static_cast<std::size_t>(first.second));
    if (rest.empty()) {  // single run: both forms coincide
      emit_run_instruction(out, first.first, first.second);
      return;
    }
    std::size_t chunk_cost = (3 + gamma_len(first.second)) + (4 + gamma_len(rest.size()) + rest.size());
    if (run_cost < chunk_cost) {
      for (const auto& [bit, count] : runs) emit_run_instruction(out, bit, count);
    } else {
      emit_run_instruction(out, first.first, first.second);
      append_chunk(out, rest);
    }
    return;
  }
  std::size_t chunk_cost = 4 + gamma_len(pending.size()) + pending.size();
  if (run_cost < chunk_cost) {
    for (const auto& [bit, count] : runs) emit_run_instruction(out, bit, count);
  } else {
    append_chunk(out, pending);
  }
}

}  // namespace

BitString literal_compress(const BitString& x) {
  BitString out;
  out.reserve(x.size() + 2);
  out.push_back(0);
  out.push_back(0);
  out.append(x);
  return out;
}

BitString rle_compress(const BitString& x) {
  BitString out;
  for (const auto& [bit, count] : runs_of(x)) emit_run_instruction(out, bit, count);
  if (out.size() >= x.size() + 2) return literal_compress(x);
  return out;
}

BitString lz_compress(const BitString& x) {
  const std::size_t n = x.size();
  BitString out;
  BitString pending;
  std::size_t pos = 0;
  while (pos < n) {
    // Longest match of x[pos..] against the already-produced prefix,
    // overlap allowed; smallest distance wins ties.
    std::size_t best_len = 0, best_dist = 0;
    for (std::size_t d = 1; d <= pos; ++d) {
      std::size_t len = 0;
      while (pos + len < n && x.bit(pos + len) == x.bit(pos - d + len)) ++len;
      if (len > best_len) {
        best_len = len;
        best_dist = d;
      }
    }
    if (best_len > 0 && 2 + gamma_len(best_dist) + gamma_len(best_len) < best_len) {
      flush_pending(out, pending, false);
      pending.clear();
      out.push_back(1);
      out.push_back(0);
      out.append(gamma_code(best_dist));
      out.append(gamma_code(best_len));
      pos += best_len;
    } else {
      pending.push_back(x.bit(pos));
      ++pos;
    }
  }
  flush_pending(out, pending, true);
  return out;
}

BitString best_compress(const BitString& x) {
  BitString lit = literal_compress(x);
  BitString rle = rle_compress(x);
  BitString lz = lz_compress(x);
  BitString* best = &lit;
  if (rle.size() < best->size()) best = &rle;
  if (lz.size() < best->size()) best = &lz;
  return std::move(*best);
}

namespace {

// EMIT_RUN b=0 c=2 then INPUT_REST: computes z -> "00"+z on the machine.
const char* kLiteralProgram = "0100101100";

}  // namespace

Compressor make_literal_codec() {
  Compressor c;
  c.name = "literal";
  c.backing_program = BitString::parse(kLiteralProgram);
  c.declared_length = c.backing_program->size();
  c.compress = literal_compress;
  return c;
}

Compressor make_rle_codec() {
  Compressor c;
  c.name = "rle";
  c.declared_length = kDriverBits;
  c.compress = rle_compress;
  return c;
}

Compressor make_lz_codec() {
  Compressor c;
  c.name = "lz";
  c.declared_length = kDriverBits;
  c.compress = lz_compress;
  return c;
}

Compressor make_best_codec() {
  Compressor c;
  c.name = "best";
  c.declared_length = kDriverBits;
  c.compress = best_compress;
  return c;
}

Compressor theorem1_compressor(std::size_t m, Oracle& oracle) {
  BBRecord bb = oracle.busy_beaver(m);
  Compressor c;
  c.name = "thm1(m=" + std::to_string(m) + ")";
  c.declared_length = bb.p_m.size() + kDriverBits;
  std::uint64_t t = bb.bb;
  Oracle* o = &oracle;
  c.compress = [o, t](const BitString& z) {
    if (z.size() > o->ceilings().complexity_max_len) {
      throw RefusalError("theorem1 compressor: search ceiling is |z| <= " +
                         std::to_string(o->ceilings().complexity_max_len));
    }
    if (auto p = o->first_producer(z, z.size(), t)) return p->program;
    return literal_compress(z);
  };
  return c;
}

Compressor program_as_compressor(const BitString& q, std::size_t intended_len) {
  (void)intended_len;
  Compressor c;
  c.name = "program(" + q.display() + ")";
  c.backing_program = q;
  c.declared_length = q.size();
  c.compress = [q](const BitString& z) { return exec(q, z).output; };
  return c;
}

bool is_compression_function(const Compressor& c, std::size_t n, std::size_t ceiling) {
  if (n > ceiling) {
    throw RefusalError("is_compression_function: exhaustive sweep ceiling is n <= " +
                       std::to_string(ceiling));
  }
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    BitString z = BitString::from_index(n, v);
    if (u_eval(c.compress(z)).output != z) return false;
  }
  return true;
}

}  // namespace cclab
