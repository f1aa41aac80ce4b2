#include "cclab/acceptance.hpp"

#include <cstdio>

#include "cclab/theorems.hpp"
#include "cclab/timebounded.hpp"

namespace cclab {

namespace {

void fail(CriterionResult& r, const std::string& why) {
  r.pass = false;
  if (r.detail.empty() || r.detail.back() != '!') r.detail = why + "!";
}

// 1. Machine totality and the Print bound.
CriterionResult criterion1() {
  CriterionResult r;
  r.id = 1;
  std::uint64_t pairs = 0, max_steps = 0;
  for (std::size_t pl = 0; pl <= 14 && r.pass; ++pl) {
    for (std::uint64_t pv = 0; pv < (1ull << pl) && r.pass; ++pv) {
      BitString p = BitString::from_index(pl, pv);
      for (std::size_t il = 0; il <= 6 && r.pass; ++il) {
        for (std::uint64_t iv = 0; iv < (1ull << il); ++iv) {
          ExecResult e = exec(p, BitString::from_index(il, iv));
          ++pairs;
          max_steps = std::max(max_steps, e.steps);
          if (e.halt_reason == HaltReason::CapExceeded || e.steps < e.output.size()) {
            fail(r, "uncapped run misbehaved on program " + p.str());
            break;
          }
        }
      }
    }
  }
  std::uint64_t prints = 0;
  for (std::size_t len = 0; len <= 10 && r.pass; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString z = BitString::from_index(len, v);
      BitString print = BitString::parse("00");
      print.append(z);
      ExecResult e = u_eval(print);
      ++prints;
      if (e.output != z || e.steps != 1 + z.size() || e.halt_reason != HaltReason::Normal) {
        fail(r, "Print failed on z = " + z.display());
        break;
      }
    }
  }
  r.payload = json{{"pairs_checked", pairs}, {"max_steps", max_steps}, {"prints_checked", prints}};
  if (r.pass) {
    r.detail = std::to_string(pairs) + " program/input pairs halt; Print exact through length 10";
  }
  return r;
}

// 2. Oracle soundness: the Print bound, witness fidelity, antitone C^t
// converging to C.
CriterionResult criterion2(Oracle& o) {
  CriterionResult r;
  r.id = 2;
  json lengths = json::array();
  std::uint64_t checked = 0;
  for (std::size_t len = 0; len <= 10 && r.pass; ++len) {
    std::size_t max_c = 0;
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      ComplexityRecord rec = o.complexity(x);
      ++checked;
      max_c = std::max(max_c, rec.value);
      if (rec.value > len + 2) {
        fail(r, "C exceeded the Print bound at " + x.display());
        break;
      }
      if (u_eval(rec.witness).output != x) {
        fail(r, "witness does not reproduce " + x.display());
        break;
      }
      std::uint64_t witness_steps = u_eval(rec.witness).steps;
      std::size_t prev = SIZE_MAX;
      for (std::uint64_t budget : {0ull, 1ull, 2ull, 4ull, 8ull, 16ull, 32ull, 128ull}) {
        ComplexityRecord ct = o.complexity_time_bounded(x, budget);
        if (ct.value > prev || ct.value < rec.value) {
          fail(r, "C^t not antitone at " + x.display());
          break;
        }
        prev = ct.value;
        if (budget >= witness_steps && ct.value != rec.value) {
          fail(r, "C^t did not converge at " + x.display());
          break;
        }
      }
      if (!r.pass) break;
    }
    lengths.push_back(json{{"len", len}, {"max_c", max_c}});
  }
  r.payload = json{{"strings_checked", checked}, {"per_length", lengths}};
  if (r.pass) r.detail = "C sound and C^t antitone/convergent for all |x| <= 10";
  return r;
}

// 3. A-set / random-strings identity at s = BB(len).
CriterionResult criterion3(Oracle& o) {
  CriterionResult r;
  r.id = 3;
  json per_len = json::array();
  for (std::size_t len = 0; len <= 8; ++len) {
    ASet a = o.a_set(o.busy_beaver(len).bb, len);
    std::vector<BitString> rand = o.random_strings(len);
    if (a.members != rand) fail(r, "sets differ at length " + std::to_string(len));
    per_len.push_back(json{{"len", len}, {"count", a.members.size()}});
  }
  r.payload = json{{"per_length", per_len}};
  if (r.pass) r.detail = "A_{BB(len)}^len equals the random strings for len <= 8";
  return r;
}

// 4. The dovetailing-compressor tradeoff on the full grid.
CriterionResult criterion4(Oracle& o) {
  CriterionResult r;
  r.id = 4;
  json per_m = json::array();
  for (std::size_t m = 0; m <= 6; ++m) {
    Thm1Report rep = verify_theorem1(m, 8, o);
    if (!rep.pass) fail(r, "theorem 1 failed at m = " + std::to_string(m));
    if (rep.corollary_slack > 2) fail(r, "corollary slack above 2 at m = " + std::to_string(m));
    per_m.push_back(to_json(rep, /*include_per_x=*/false));
  }
  r.payload = json{{"n_max", 8}, {"per_m", per_m}};
  if (r.pass) r.detail = "compressor exact below m, within +2 above, slack <= 2, m = 0..6";
  return r;
}

// 5. Lower-bound mechanism: slow decompression behind every violation.
CriterionResult criterion5(Oracle& o) {
  CriterionResult r;
  r.id = 5;
  json per_instance = json::array();
  std::uint64_t cfs = 0, violations = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = m; n <= 5; ++n) {
      Thm2Report rep = verify_theorem2(m, n, 10, o);
      if (!rep.mechanism_pass) {
        fail(r, "fast decompression of a violating output at (m,n) = (" + std::to_string(m) + "," +
                    std::to_string(n) + ")");
      }
      cfs += rep.cf_count;
      violations += rep.violations.size();
      per_instance.push_back(to_json(rep));
    }
  }
  r.payload = json{{"q_len_max", 10}, {"instances", per_instance}};
  if (r.pass) {
    r.detail = "zero counterexamples over the grid (" + std::to_string(cfs) +
               " compression functions, " + std::to_string(violations) + " violations)";
  }
  return r;
}

// 6. Extraction reduction lands on the least random string.
CriterionResult criterion6(Oracle& o) {
  CriterionResult r;
  r.id = 6;
  json cases = json::array();
  std::vector<Compressor> qs;
  qs.push_back(program_as_compressor(BitString::parse("0100101100"), 4));
  qs.push_back(make_literal_codec());
  qs.push_back(make_best_codec());
  qs.push_back(theorem1_compressor(2, o));
  for (const Compressor& q : qs) {
    for (std::size_t n : {3, 4}) {
      for (std::size_t m = 0; m <= 6; ++m) {
        ExtractRandomResult e = extract_random(q, n, m, o);
        if (!e.contract_applies) continue;
        std::vector<BitString> rand = o.random_strings(m);
        bool ok = !rand.empty() && e.z == rand.front();
        if (!ok) fail(r, "extraction missed the least random string at m = " + std::to_string(m));
        cases.push_back(json{{"q", q.name}, {"n", n}, {"m", m}, {"t_prime", e.t_prime},
                             {"z", e.z.str()}, {"ok", ok}});
      }
    }
  }
  r.payload = json{{"cases", cases}};
  if (r.pass) {
    r.detail = std::to_string(cases.size()) + " applicable (q,n,m) cases all extract correctly";
  }
  return r;
}

// 7. Codec contract: exhaustive roundtrip to length 12 plus seeded random
// strings to length 256, never beyond Print-sized output.
CriterionResult criterion7() {
  CriterionResult r;
  r.id = 7;
  std::uint64_t checked = 0;
  for (std::size_t len = 0; len <= 12 && r.pass; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      BitString c = best_compress(x);
      ++checked;
      if (u_eval(c).output != x || c.size() > len + 2) {
        fail(r, "codec contract broken at " + x.display());
        break;
      }
    }
  }
  std::uint64_t random_checked = 0;
  for (std::uint64_t i = 0; i < 10000 && r.pass; ++i) {
    BitString x = trial_bits(/*rng_seed=*/2024, /*stream=*/7, i, i % 257);
    BitString c = best_compress(x);
    ++random_checked;
    if (u_eval(c).output != x || c.size() > x.size() + 2) {
      fail(r, "codec contract broken on random trial " + std::to_string(i));
    }
  }
  r.payload = json{{"exhaustive_checked", checked}, {"random_checked", random_checked}};
  if (r.pass) {
    r.detail = std::to_string(checked) + " exhaustive + " + std::to_string(random_checked) +
               " random strings round-trip within the bound";
  }
  return r;
}

// 8. Distinguisher thresholds at the pinned parameters.
CriterionResult criterion8() {
  CriterionResult r;
  r.id = 8;
  DistinguisherReport rep = run_distinguisher(make_best_codec(), 16, 64, 1000, /*rng_seed=*/1);
  if (rep.accept_rate_prg != 0.0) fail(r, "an expander output was accepted");
  if (rep.accept_rate_uniform < 0.3) fail(r, "uniform acceptance below 0.3");
  if (rep.advantage < 0.3) fail(r, "advantage below 0.3");
  r.payload = to_json(rep);
  if (r.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "prg rate 0, uniform rate %.3f, advantage %.3f",
                  rep.accept_rate_uniform, rep.advantage);
    r.detail = buf;
  }
  return r;
}

std::vector<CriterionResult> run_1_to_8() {
  Oracle oracle;
  std::vector<CriterionResult> out;
  out.push_back(criterion1());
  out.push_back(criterion2(oracle));
  out.push_back(criterion3(oracle));
  out.push_back(criterion4(oracle));
  out.push_back(criterion5(oracle));
  out.push_back(criterion6(oracle));
  out.push_back(criterion7());
  out.push_back(criterion8());
  return out;
}

// 9. Determinism: a fresh rerun of 1-8 serializes to identical bytes.
CriterionResult criterion9() {
  CriterionResult r;
  r.id = 9;
  std::vector<CriterionResult> first = run_1_to_8();
  std::vector<CriterionResult> second = run_1_to_8();
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].payload.dump() != second[i].payload.dump()) {
      fail(r, "criterion " + std::to_string(i + 1) + " payload changed between runs");
    }
  }
  r.payload = json{{"criteria_compared", first.size()}};
  if (r.pass) r.detail = "criteria 1-8 payloads byte-identical across reruns";
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  Oracle oracle;
  switch (id) {
    case 1: return criterion1();
    case 2: return criterion2(oracle);
    case 3: return criterion3(oracle);
    case 4: return criterion4(oracle);
    case 5: return criterion5(oracle);
    case 6: return criterion6(oracle);
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    default: throw RefusalError("acceptance: criteria are numbered 1..9");
  }
}

std::vector<CriterionResult> run_acceptance(std::optional<int> only) {
  if (only) return {run_criterion(*only)};
  std::vector<CriterionResult> out = run_1_to_8();
  out.push_back(criterion9());
  return out;
}

}  // namespace cclab
