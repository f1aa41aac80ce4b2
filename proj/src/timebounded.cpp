#include "cclab/timebounded.hpp"

#include <algorithm>

namespace cclab {

namespace {

constexpr std::uint64_t kSat = 1ull << 62;

std::uint64_t mul_sat(std::uint64_t x, std::uint64_t y) {
  if (y != 0 && x > kSat / y) return kSat;
  return x * y;
}

std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::size_t kFailureSamples = 32;

}  // namespace

std::uint64_t TimeBound::eval(std::size_t n) const {
  std::uint64_t p = 1;
  for (std::uint64_t i = 0; i < b; ++i) p = mul_sat(p, n);
  std::uint64_t t = mul_sat(a, p);
  return t > kSat - c ? kSat : t + c;
}

ComplexityRecord ct_complexity(const BitString& x, TimeBound t, Oracle& oracle) {
  return oracle.complexity_time_bounded(x, t.eval(x.size()));
}

FgReport fg_check(const Compressor& c, TimeBound f, TimeBound g, std::span<const std::size_t> lengths) {
  FgReport rep;
  rep.compressor = c.name;
  rep.f = f;
  rep.g = g;
  rep.lengths.assign(lengths.begin(), lengths.end());
  rep.f_modeled = c.program_backed();
  for (std::size_t n : lengths) {
    if (n > 18) throw RefusalError("fg_check: exhaustive sweep ceiling is length <= 18");
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      BitString x = BitString::from_index(n, v);
      ++rep.strings_checked;
      BitString qx = c.compress(x);
      std::uint64_t g_bound = g.eval(n);
      std::uint64_t g_steps = u_eval(qx).steps;
      if (g_steps > g_bound) {
        rep.g_pass = false;
        ++rep.g_fail_count;
        if (rep.g_failures.size() < kFailureSamples) rep.g_failures.push_back({x, g_steps, g_bound});
      }
      if (rep.f_modeled) {
        std::uint64_t f_bound = f.eval(n);
        std::uint64_t f_steps = exec(*c.backing_program, x).steps;
        if (f_steps > f_bound) {
          rep.f_pass = false;
          ++rep.f_fail_count;
          if (rep.f_failures.size() < kFailureSamples) rep.f_failures.push_back({x, f_steps, f_bound});
        }
      }
    }
  }
  return rep;
}

BitString prg_expand(const BitString& seed, std::size_t out_len) {
  if (seed.empty() || seed.size() >= out_len) {
    throw RefusalError("prg_expand: requires 1 <= |seed| < out_len");
  }
  BitString out;
  out.reserve(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out.push_back(seed.bit(i % seed.size()));
  return out;
}

int distinguisher_T(const Compressor& c, const BitString& x) {
  return c.compress(x).size() < x.size() ? 0 : 1;
}

BitString trial_bits(std::uint64_t rng_seed, std::uint32_t stream, std::uint64_t trial, std::size_t len) {
  std::uint64_t state = rng_seed;
  state ^= 0x632BE59BD9B4E019ull * (static_cast<std::uint64_t>(stream) + 1);
  state ^= 0x9E3779B97F4A7C15ull * (trial + 1);
  BitString out;
  out.reserve(len);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i % 64 == 0) word = splitmix_next(state);
    out.push_back(static_cast<int>((word >> (63 - (i % 64))) & 1));
  }
  return out;
}

DistinguisherReport run_distinguisher(const Compressor& c, std::size_t seed_len, std::size_t out_len,
                                      std::uint64_t trials, std::uint64_t rng_seed) {
  if (seed_len < 1 || seed_len >= out_len) {
    throw RefusalError("run_distinguisher: requires 1 <= seed_len < out_len");
  }
  DistinguisherReport rep;
  rep.compressor = c.name;
  rep.seed_len = seed_len;
  rep.out_len = out_len;
  rep.trials = trials;
  rep.rng_seed = rng_seed;
  rep.rng_algorithm = "splitmix64";
  for (std::uint64_t i = 0; i < trials; ++i) {
    BitString x = trial_bits(rng_seed, 0, i, out_len);
    rep.accept_count_uniform += static_cast<std::uint64_t>(distinguisher_T(c, x));
    BitString seed = trial_bits(rng_seed, 1, i, seed_len);
    rep.accept_count_prg += static_cast<std::uint64_t>(distinguisher_T(c, prg_expand(seed, out_len)));
  }
  if (trials > 0) {
    rep.accept_rate_uniform = static_cast<double>(rep.accept_count_uniform) / static_cast<double>(trials);
    rep.accept_rate_prg = static_cast<double>(rep.accept_count_prg) / static_cast<double>(trials);
  }
  rep.advantage = rep.accept_rate_uniform - rep.accept_rate_prg;
  return rep;
}

CompressorFamily uniform_family(const Compressor& c) {
  CompressorFamily fam;
  fam.name = c.name;
  fam.generator = [c](std::size_t) { return c; };
  fam.size_bound = [c](std::size_t) { return c.declared_length; };
  return fam;
}

bool family_check(const CompressorFamily& fam, std::span<const std::size_t> lengths) {
  return std::all_of(lengths.begin(), lengths.end(), [&](std::size_t n) {
    return is_compression_function(fam.generator(n), n);
  });
}

}  // namespace cclab
