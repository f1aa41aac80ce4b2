#include "cclab/theorems.hpp"

#include <algorithm>

namespace cclab {

namespace {

// Saturating n^k, for exact integer tests of k*log2(n) bounds:
// k*log2(n) >= e  <=>  n^k >= 2^e.
std::uint64_t pow_sat(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > (1ull << 62) / (n ? n : 1)) return 1ull << 62;
    r *= n;
  }
  return r;
}

bool klog_at_least(std::uint64_t k, std::uint64_t n, std::int64_t e) {
  if (e <= 0) return true;
  if (static_cast<std::uint64_t>(e) >= 62) return false;
  return pow_sat(n, k) >= (1ull << e);
}

bool klog_at_most(std::uint64_t k, std::uint64_t n, std::int64_t e) {
  if (e < 0) return false;
  if (static_cast<std::uint64_t>(e) >= 62) return true;
  return pow_sat(n, k) <= (1ull << e);
}

}  // namespace

BitString adversarial_string(std::size_t m, std::size_t n, Oracle& oracle) {
  if (m > n) throw RefusalError("adversarial_string: requires m <= n");
  BBRecord bb = oracle.busy_beaver(m);
  ASet a = oracle.a_set(bb.bb, n);
  return a.members.front();  // never empty
}

Thm1Report verify_theorem1(std::size_t m, std::size_t n_max, Oracle& oracle) {
  if (n_max > 12) throw RefusalError("verify_theorem1: exhaustive grid ceiling is n_max <= 12");
  Thm1Report rep;
  rep.m = m;
  rep.n_max = n_max;
  Compressor q = theorem1_compressor(m, oracle);
  rep.declared_length = q.declared_length;

  bool all_ok = true;
  std::int64_t slack = INT64_MIN;
  std::size_t case2_overhead = 0;
  for (std::size_t len = 0; len <= n_max; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      Thm1Entry e;
      e.x = BitString::from_index(len, v);
      e.c = oracle.complexity(e.x).value;
      BitString qx = q.compress(e.x);
      e.q_len = qx.size();
      e.case_taken = e.c <= m ? 1 : 2;
      bool roundtrip = oracle.run(qx).output == e.x;
      if (e.case_taken == 1) {
        ++rep.case1_count;
        e.ok = roundtrip && e.q_len == e.c;
      } else {
        ++rep.case2_count;
        e.ok = roundtrip && e.q_len <= e.x.size() + rep.k_print;
        case2_overhead = std::max(case2_overhead,
                                  e.q_len > e.x.size() ? e.q_len - e.x.size() : 0);
      }
      all_ok = all_ok && e.ok;
      if (e.x.size() >= m) {
        slack = std::max(slack, static_cast<std::int64_t>(e.q_len) - static_cast<std::int64_t>(e.c) -
                                    (static_cast<std::int64_t>(e.x.size()) - static_cast<std::int64_t>(m)));
      }
      rep.per_x.push_back(std::move(e));
    }
  }
  rep.pass = all_ok;
  rep.corollary_slack = slack == INT64_MIN ? 0 : slack;  // m > n_max leaves the corollary vacuous
  std::size_t size_overhead = rep.declared_length > m ? rep.declared_length - m : 0;
  rep.k_min_statement = std::max(size_overhead, case2_overhead);
  return rep;
}

Thm2Report verify_theorem2(std::size_t m, std::size_t n, std::size_t q_len_max, Oracle& oracle) {
  if (n > 6) throw RefusalError("verify_theorem2: enumeration ceiling is n <= 6");
  if (q_len_max > 12) throw RefusalError("verify_theorem2: enumeration ceiling is q_len_max <= 12");
  Thm2Report rep;
  rep.m = m;
  rep.n = n;
  rep.q_len_max = q_len_max;
  rep.t = oracle.busy_beaver(m).bb;
  rep.x_adv = adversarial_string(m, n, oracle);
  rep.c_x_adv = oracle.complexity(rep.x_adv).value;
  rep.degenerate = n <= 1;

  // Enumerate genuine compression functions for length n, evaluate each on
  // the adversarial string, and record every q that compresses it below n.
  std::vector<std::pair<std::size_t, std::size_t>> cf_evals;  // (|q|, |q(x_adv)|)
  for (std::size_t len = 0; len <= q_len_max; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString q = BitString::from_index(len, v);
      bool is_cf = true;
      for (std::uint64_t zv = 0; zv < (1ull << n) && is_cf; ++zv) {
        BitString z = BitString::from_index(n, zv);
        is_cf = u_eval(exec(q, z).output).output == z;
      }
      if (!is_cf) continue;
      ++rep.cf_count;
      BitString qx = exec(q, rep.x_adv).output;
      cf_evals.emplace_back(len, qx.size());
      if (qx.size() < n) {
        ExecResult dec = u_eval(qx);
        rep.violations.push_back(Thm2Violation{std::move(q), qx.size(), dec.steps});
      }
    }
  }
  rep.mechanism_pass = std::all_of(rep.violations.begin(), rep.violations.end(),
                                   [&](const Thm2Violation& viol) { return viol.decomp_steps > rep.t; });

  if (!rep.degenerate) {
    // Item 2: C(x_adv) <= m + k log2 n.
    std::int64_t excess = static_cast<std::int64_t>(rep.c_x_adv) - static_cast<std::int64_t>(m);
    while (!klog_at_least(rep.k_min_item2, n, excess)) ++rep.k_min_item2;

    // Items 3 and 4 quantify over cfs with |q| <= m - k log2 n; both are
    // monotone in k (the set shrinks and the bounds weaken).
    auto in_scope = [&](std::size_t k, std::size_t q_len) {
      return klog_at_most(k, n, static_cast<std::int64_t>(m) - static_cast<std::int64_t>(q_len));
    };
    for (;; ++rep.k_min_item3) {
      bool ok = std::all_of(cf_evals.begin(), cf_evals.end(), [&](const auto& qe) {
        return !in_scope(rep.k_min_item3, qe.first) || qe.second >= n;
      });
      if (ok) break;
    }
    for (;; ++rep.k_min_item4) {
      std::size_t k = rep.k_min_item4;
      // need |q(x)| - C(x) >= n - m - k log2 n for every in-scope cf
      bool ok = std::all_of(cf_evals.begin(), cf_evals.end(), [&](const auto& qe) {
        if (!in_scope(k, qe.first)) return true;
        std::int64_t need = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m) -
                            (static_cast<std::int64_t>(qe.second) - static_cast<std::int64_t>(rep.c_x_adv));
        return klog_at_least(k, n, need);
      });
      if (ok) break;
    }
    rep.k_min_items = std::max({rep.k_min_item2, rep.k_min_item3, rep.k_min_item4});
  }

  rep.pass = rep.mechanism_pass && rep.x_adv.size() == n;
  return rep;
}

ExtractRandomResult extract_random(const Compressor& q, std::size_t n, std::size_t m, Oracle& oracle) {
  if (!is_compression_function(q, n)) {
    throw RefusalError("extract_random: q is not a compression function for length " + std::to_string(n));
  }
  ExtractRandomResult out;
  out.t_prime = 0;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    BitString y = BitString::from_index(n, v);
    out.t_prime = std::max(out.t_prime, u_eval(q.compress(y)).steps);
  }
  out.bb_m = oracle.busy_beaver(m).bb;
  out.contract_applies = out.t_prime >= out.bb_m;
  out.z = oracle.a_set(out.t_prime, m).members.front();
  return out;
}

MeasuredConstants estimate_constants(const std::vector<std::pair<std::size_t, std::size_t>>& grid,
                                     std::size_t q_len_max, Oracle& oracle) {
  MeasuredConstants k;
  for (const auto& [m, n] : grid) {
    if (m > n) continue;
    Thm1Report r1 = verify_theorem1(m, n, oracle);
    if (r1.k_min_statement >= k.k_min_thm1) {
      k.k_min_thm1 = r1.k_min_statement;
      k.thm1_witness_m = m;
      k.thm1_witness_n = n;
    }
    Thm2Report r2 = verify_theorem2(m, n, q_len_max, oracle);
    if (!r2.degenerate && r2.k_min_items >= k.k_min_thm2) {
      k.k_min_thm2 = r2.k_min_items;
      k.thm2_witness_m = m;
      k.thm2_witness_n = n;
    }
  }
  return k;
}

}  // namespace cclab
