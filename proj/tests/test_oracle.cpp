#include <doctest.h>

#include <algorithm>
#include <cstdio>

#include "cclab/oracle.hpp"
#include "support/naive.hpp"

using namespace cclab;
using testsupport::XorShift;

namespace {
BitString bits(const char* s) { return BitString::parse(s); }
}  // namespace

TEST_CASE("complexity basics") {
  Oracle o;
  ComplexityRecord r = o.complexity(BitString());
  CHECK(r.value == 0);
  CHECK(r.witness.empty());

  r = o.complexity(bits("0"));
  CHECK(r.value == 3);
  CHECK(r.witness.str() == "000");

  r = o.complexity(BitString::zeros(16));
  CHECK(r.value == 12);
  CHECK(r.witness.str() == "010000010000");
  CHECK(u_eval(r.witness).output == BitString::zeros(16));
}

TEST_CASE("complexity agrees with naive enumeration") {
  Oracle o;
  for (std::size_t len = 0; len <= 7; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      ComplexityRecord r = o.complexity(x);
      auto [nv, nw] = testsupport::naive_complexity(x);
      CHECK(r.value == nv);
      CHECK(r.witness == nw);
      CHECK(r.value <= len + 2);
      CHECK(u_eval(r.witness).output == x);
    }
  }
}

TEST_CASE("time-bounded complexity") {
  Oracle o;
  SUBCASE("base cases") {
    ComplexityRecord r = o.complexity_time_bounded(BitString(), 0);
    CHECK(r.value == 0);
    CHECK_FALSE(r.exceeds_budget);

    // witness "000" needs 2 steps; budget 1 fits nothing, budget 2 does
    r = o.complexity_time_bounded(bits("0"), 1);
    CHECK(r.value == 3);
    CHECK(r.witness.str() == "000");
    CHECK(r.exceeds_budget);
    r = o.complexity_time_bounded(bits("0"), 2);
    CHECK(r.value == 3);
    CHECK_FALSE(r.exceeds_budget);
  }
  SUBCASE("antitone in the budget and converges to C") {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (std::uint64_t v = 0; v < (1ull << len); ++v) {
        BitString x = BitString::from_index(len, v);
        ComplexityRecord unbounded = o.complexity(x);
        std::uint64_t witness_steps = u_eval(unbounded.witness).steps;
        std::size_t prev = SIZE_MAX;
        for (std::uint64_t budget : {0ull, 1ull, 2ull, 4ull, 8ull, 16ull, 64ull}) {
          ComplexityRecord r = o.complexity_time_bounded(x, budget);
          CHECK(r.value >= unbounded.value);
          CHECK(r.value <= prev);
          prev = r.value;
          if (!r.exceeds_budget) CHECK(u_eval(r.witness).steps <= budget);
          if (budget >= witness_steps) {
            CHECK(r.value == unbounded.value);
            CHECK(r.witness == unbounded.witness);
          }
        }
      }
    }
  }
  SUBCASE("agrees with naive bounded scan") {
    XorShift rng(3);
    for (int i = 0; i < 300; ++i) {
      BitString x = rng.bits(rng.below(7));
      std::uint64_t budget = rng.below(12);
      ComplexityRecord r = o.complexity_time_bounded(x, budget);
      auto naive = testsupport::naive_first_producer(x, x.size() + 2, budget);
      if (naive) {
        CHECK_FALSE(r.exceeds_budget);
        CHECK(r.value == naive->first);
        CHECK(r.witness == naive->second);
      } else {
        CHECK(r.exceeds_budget);
        CHECK(r.value == x.size() + 2);
      }
    }
  }
}

TEST_CASE("busy beaver") {
  Oracle o;
  BBRecord b0 = o.busy_beaver(0);
  CHECK(b0.bb == 0);
  CHECK(b0.p_m.empty());

  BBRecord b2 = o.busy_beaver(2);
  CHECK(b2.bb == 1);
  CHECK(b2.p_m.str() == "00");

  BBRecord b4 = o.busy_beaver(4);
  CHECK(b4.bb == 3);
  CHECK(b4.p_m.str() == "0000");
  CHECK(b4.bb >= b2.bb);

  // regression pins for the larger values the harnesses lean on
  CHECK(o.busy_beaver(6).bb == 5);
  CHECK(o.busy_beaver(8).bb == 8);
  CHECK(o.busy_beaver(12).bb == 32);
  CHECK(o.busy_beaver(14).bb == 64);

  std::uint64_t prev = 0;
  for (std::size_t m = 0; m <= 12; ++m) {
    BBRecord b = o.busy_beaver(m);
    CHECK(b.bb >= prev);
    prev = b.bb;
    CHECK(b.p_m.size() <= m);
    CHECK(u_eval(b.p_m).steps == b.bb);
  }
  for (std::size_t m = 0; m <= 8; ++m) {
    auto [nb, np] = testsupport::naive_busy_beaver(m);
    BBRecord b = o.busy_beaver(m);
    CHECK(b.bb == nb);
    CHECK(b.p_m == np);
  }
}

TEST_CASE("a sets") {
  Oracle o;
  ASet a = o.a_set(0, 1);
  REQUIRE(a.members.size() == 2);
  CHECK(a.members[0].str() == "0");
  CHECK(a.members[1].str() == "1");
  CHECK(a.canonical_serialization() == "0\n1\n");

  CHECK(o.a_set(5, 0).members.size() == 1);  // the empty string survives everything
  CHECK(o.a_set(5, 0).canonical_serialization() == "_\n");

  // against the naive recomputation
  for (std::uint64_t s : {0ull, 1ull, 3ull, 9ull}) {
    for (std::size_t len = 0; len <= 6; ++len) {
      CHECK(o.a_set(s, len).members == testsupport::naive_a_set(s, len));
    }
  }

  // more time can only shrink the set
  for (std::size_t len = 0; len <= 8; ++len) {
    ASet loose = o.a_set(2, len);
    ASet tight = o.a_set(20, len);
    CHECK(tight.members.size() <= loose.members.size());
    for (const BitString& y : tight.members) {
      bool found = std::find(loose.members.begin(), loose.members.end(), y) != loose.members.end();
      CHECK(found);
    }
    CHECK_FALSE(o.a_set(0, len).members.empty());
  }
}

TEST_CASE("random strings and the A-set identity") {
  Oracle o;
  auto r0 = o.random_strings(0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].empty());

  CHECK(o.random_strings(4).size() == 16);  // nothing of length 4 compresses here

  // at length 11 the machine first compresses something: the two constant runs
  auto r11 = o.random_strings(11);
  CHECK(r11.size() == 2046);
  CHECK(o.complexity(BitString::zeros(11)).value == 10);

  for (std::size_t len = 0; len <= 8; ++len) {
    CHECK(o.a_set(o.busy_beaver(len).bb, len).members == o.random_strings(len));
  }
  // and where the sets are proper subsets of all strings
  for (std::size_t len : {11, 12}) {
    auto rand = o.random_strings(len);
    CHECK(rand.size() < (1ull << len));
    CHECK(o.a_set(o.busy_beaver(len).bb, len).members == rand);
  }
}

TEST_CASE("incompressible fraction") {
  Oracle o;
  IncompressibleFraction f0 = o.incompressible_fraction(0);
  CHECK(f0.count == 1);
  CHECK(f0.value() == 1.0);

  for (std::size_t n = 0; n <= 10; ++n) {
    IncompressibleFraction f = o.incompressible_fraction(n);
    CHECK(f.value() >= 1.0 / static_cast<double>(1ull << n));  // at least one survivor
    CHECK(f.count <= (1ull << n));
  }
  CHECK(o.incompressible_fraction(12).str() == "4094/2^12");
}

TEST_CASE("ceilings refuse rather than hang") {
  Oracle o;
  CHECK_THROWS_AS((void)o.complexity(BitString::zeros(19)), RefusalError);
  CHECK_THROWS_AS((void)o.complexity_time_bounded(BitString::zeros(19), 5), RefusalError);
  CHECK_THROWS_AS((void)o.busy_beaver(15), RefusalError);
  CHECK_THROWS_AS((void)o.a_set(3, 15), RefusalError);
  CHECK_THROWS_AS((void)o.random_strings(15), RefusalError);
  Oracle tiny(Oracle::Ceilings{4, 4, 4, 4});
  CHECK_THROWS_AS((void)o.busy_beaver(15), RefusalError);
  CHECK_THROWS_AS((void)tiny.complexity(BitString::zeros(5)), RefusalError);
  CHECK(tiny.complexity(BitString::zeros(4)).value == 6);
}

TEST_CASE("oracle determinism across instances") {
  Oracle a, b;
  // interrogate b in a different order to shake out memo-order effects
  (void)b.busy_beaver(9);
  (void)b.random_strings(6);
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      ComplexityRecord ra = a.complexity(x);
      ComplexityRecord rb = b.complexity(x);
      CHECK(ra.value == rb.value);
      CHECK(ra.witness == rb.witness);
    }
  }
  CHECK(a.busy_beaver(9).p_m == b.busy_beaver(9).p_m);
  CHECK(a.a_set(7, 5).members == b.a_set(7, 5).members);
}

TEST_CASE("partitioned enumeration reduces to the sequential answer") {
  // The enumeration contract: splitting the rank space into chunks and
  // merging per-chunk results (max steps with shortlex tie-break, or
  // shortlex-least producer) must reproduce the sequential records.
  Oracle o;
  const std::size_t m = 9;
  const std::uint64_t total = (2ull << m) - 1;
  const int parts = 5;
  std::uint64_t best_steps = 0;
  std::uint64_t best_rank = 0;
  bool have_best = false;
  for (int part = parts - 1; part >= 0; --part) {  // merge order must not matter
    std::uint64_t lo = total * part / parts, hi = total * (part + 1) / parts;
    std::uint64_t part_steps = 0, part_rank = 0;
    bool have = false;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      std::uint64_t steps = u_eval(BitString::from_rank(rank)).steps;
      if (!have || steps > part_steps) {
        part_steps = steps;
        part_rank = rank;
        have = true;
      }
    }
    if (!have) continue;
    if (!have_best || part_steps > best_steps ||
        (part_steps == best_steps && part_rank < best_rank)) {
      best_steps = part_steps;
      best_rank = part_rank;
      have_best = true;
    }
  }
  BBRecord seq = o.busy_beaver(m);
  CHECK(best_steps == seq.bb);
  CHECK(BitString::from_rank(best_rank) == seq.p_m);

  // same for the first producer of a string
  BitString target = BitString::parse("000");
  std::optional<std::uint64_t> producer;
  for (int part = parts - 1; part >= 0; --part) {
    std::uint64_t lo = total * part / parts, hi = total * (part + 1) / parts;
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      if (u_eval(BitString::from_rank(rank)).output == target) {
        if (!producer || rank < *producer) producer = rank;
        break;  // ranks ascend within a chunk
      }
    }
  }
  REQUIRE(producer.has_value());
  CHECK(BitString::from_rank(*producer) == o.complexity(target).witness);
}

TEST_CASE("memoized runs match direct evaluation") {
  Oracle o;
  testsupport::XorShift rng(51);
  for (int i = 0; i < 400; ++i) {
    BitString s = rng.bits(rng.below(14));
    auto r = o.run(s);
    ExecResult direct = u_eval(s);
    CHECK(r.output == direct.output);
    CHECK(r.steps == direct.steps);
  }
  // beyond the table the oracle evaluates directly
  BitString longprog = BitString::parse("00");
  longprog.append(rng.bits(40));
  auto r = o.run(longprog);
  CHECK(r.output == u_eval(longprog).output);
  CHECK(r.steps == 41);
}

TEST_CASE("run cache persists and reloads") {
  Oracle a;
  (void)a.complexity(bits("01101"));  // populate a few lengths
  std::string path = "cclab_test_cache.tsv";
  a.save_cache(path);

  Oracle b;
  b.load_cache(path);
  for (std::size_t len = 0; len <= 5; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      CHECK(b.complexity(x).witness == a.complexity(x).witness);
      auto ra = a.run(x);
      auto rb = b.run(x);
      CHECK(ra.output == rb.output);
      CHECK(ra.steps == rb.steps);
    }
  }

  Oracle c;
  CHECK_THROWS_AS(c.load_cache("does_not_exist.tsv"), std::runtime_error);
  std::remove(path.c_str());
}
