#include <doctest.h>

#include "cclab/compress.hpp"
#include "support/naive.hpp"

using namespace cclab;
using testsupport::XorShift;

namespace {
BitString bits(const char* s) { return BitString::parse(s); }
}  // namespace

TEST_CASE("literal codec") {
  CHECK(literal_compress(BitString()).str() == "00");
  CHECK(literal_compress(bits("101")).str() == "00101");
  CHECK(u_eval(literal_compress(bits("101"))).output.str() == "101");
  XorShift rng(31);
  for (int i = 0; i < 500; ++i) {
    BitString x = rng.bits(rng.below(100));
    CHECK(literal_compress(x).size() == x.size() + 2);
  }
}

TEST_CASE("rle codec") {
  BitString c = rle_compress(BitString::zeros(16));
  CHECK(c.str() == "010000010000");
  CHECK(c.size() == 12);
  CHECK(u_eval(c).output == BitString::zeros(16));
  CHECK(literal_compress(BitString::zeros(16)).size() == 18);

  // not shorter than literal: falls back to literal
  CHECK(rle_compress(bits("01")).str() == "0001");
  CHECK(rle_compress(BitString()).empty());  // the empty program outputs nothing
}

TEST_CASE("lz codec frozen encodings") {
  BitString a8 = lz_compress(bits("0101010101010101"));
  CHECK(a8.size() == 20);
  CHECK(a8.str() == "01010111100100001110");  // two EMIT_RUNs + COPY_BACK d=2 l=14
  CHECK(u_eval(a8).output == bits("0101010101010101"));
  // literal is 18 here, so best prefers it
  CHECK(best_compress(bits("0101010101010101")).str() == "000101010101010101");

  BitString x64 = bits("01");
  for (int i = 0; i < 5; ++i) x64.append(x64);  // (01)^32
  BitString a32 = lz_compress(x64);
  CHECK(a32.size() == 24);  // COPY_BACK d=2 l=62, gamma(62) takes 11 bits
  CHECK(u_eval(a32).output == x64);
  CHECK(best_compress(x64) == a32);
}

TEST_CASE("lz first instruction stays runnable") {
  // A chunk-style flush at position 0 would start with "11" and be eaten
  // by the pairing convention; the codec must sidestep that.
  BitString x = bits("0110");
  x.append(BitString::zeros(60));
  BitString c = lz_compress(x);
  CHECK(c.bit(0) == 0);
  CHECK(u_eval(c).output == x);
  CHECK(c.size() < x.size());
  XorShift rng(37);
  for (int i = 0; i < 2000; ++i) {
    BitString head = rng.bits(1 + rng.below(16));
    BitString s = head;
    s.append(BitString::zeros(rng.below(80)));
    s.append(head);
    BitString p = lz_compress(s);
    CHECK(u_eval(p).output == s);
    if (!p.empty()) CHECK(p.bit(0) == 0);
  }
}

TEST_CASE("codec roundtrip and bound") {
  for (std::size_t len = 0; len <= 12; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      for (auto codec : {literal_compress, rle_compress, lz_compress, best_compress}) {
        BitString c = codec(x);
        CHECK(u_eval(c).output == x);
      }
      CHECK(best_compress(x).size() <= len + 2);
    }
  }
  XorShift rng(41);
  for (int i = 0; i < 10000; ++i) {
    BitString x = rng.bits(rng.below(257));
    for (auto codec : {literal_compress, rle_compress, lz_compress, best_compress}) {
      CHECK(u_eval(codec(x)).output == x);
    }
    CHECK(best_compress(x).size() <= x.size() + 2);
  }
}

TEST_CASE("compressed length never beats the oracle") {
  Oracle o;
  Compressor thm1 = theorem1_compressor(4, o);
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      BitString x = BitString::from_index(len, v);
      std::size_t c = o.complexity(x).value;
      CHECK(literal_compress(x).size() >= c);
      CHECK(rle_compress(x).size() >= c);
      CHECK(lz_compress(x).size() >= c);
      CHECK(best_compress(x).size() >= c);
      CHECK(thm1.compress(x).size() >= c);
    }
  }
}

TEST_CASE("dovetailing compressor") {
  Oracle o;
  SUBCASE("m=3 compresses a 3-bit-complexity string exactly") {
    Compressor q = theorem1_compressor(3, o);
    BitString out = q.compress(bits("0"));
    CHECK(out.str() == "000");
    CHECK(out.size() == o.complexity(bits("0")).value);
    CHECK(q.declared_length == o.busy_beaver(3).p_m.size() + kDriverBits);
  }
  SUBCASE("m=0 searches within zero steps, so everything nonempty prints") {
    Compressor q = theorem1_compressor(0, o);
    CHECK(q.compress(bits("1")).str() == "001");
    CHECK(q.compress(BitString()).empty());
    CHECK(q.declared_length == kDriverBits);
  }
  SUBCASE("m=12 recovers the exact witness of a compressible string") {
    Compressor q = theorem1_compressor(12, o);
    BitString z = BitString::zeros(16);
    ComplexityRecord rec = o.complexity(z);
    REQUIRE(rec.value == 12);
    CHECK(q.compress(z) == rec.witness);
  }
  SUBCASE("is a compression function at small lengths") {
    Compressor q = theorem1_compressor(2, o);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(is_compression_function(q, n));
  }
  SUBCASE("falls back to Print beyond the search ceiling") {
    Compressor q = theorem1_compressor(2, o);
    CHECK_THROWS_AS((void)q.compress(BitString::zeros(19)), RefusalError);
  }
}

TEST_CASE("program-backed compressors") {
  BitString q_lit = bits("0100101100");
  Compressor c = program_as_compressor(q_lit, 4);
  CHECK(c.program_backed());
  CHECK(c.declared_length == 10);
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(is_compression_function(c, n));
    for (std::uint64_t v = 0; v < (1ull << n); v += (n > 4 ? 7 : 1)) {
      BitString z = BitString::from_index(n, v);
      CHECK(c.compress(z) == literal_compress(z));
    }
  }

  Compressor swallow = program_as_compressor(bits("00"), 0);
  CHECK(swallow.compress(bits("1101")).empty());
  CHECK(is_compression_function(swallow, 0));
  CHECK_FALSE(is_compression_function(swallow, 1));

  Compressor empty = program_as_compressor(BitString(), 0);
  CHECK(is_compression_function(empty, 0));
  CHECK_FALSE(is_compression_function(empty, 1));
}

TEST_CASE("is_compression_function ceiling") {
  Compressor c = make_literal_codec();
  CHECK(is_compression_function(c, 10));
  CHECK_THROWS_AS((void)is_compression_function(c, 17), RefusalError);
  CHECK_THROWS_AS((void)is_compression_function(c, 9, 8), RefusalError);
}

TEST_CASE("codec descriptors") {
  CHECK(make_literal_codec().program_backed());
  CHECK(make_literal_codec().backing_program->str() == "0100101100");
  CHECK_FALSE(make_rle_codec().program_backed());
  CHECK(make_rle_codec().declared_length == kDriverBits);
  CHECK(make_best_codec().name == "best");
  // the backing program really computes the literal codec
  BitString q = *make_literal_codec().backing_program;
  XorShift rng(43);
  for (int i = 0; i < 200; ++i) {
    BitString z = rng.bits(rng.below(40));
    CHECK(exec(q, z).output == literal_compress(z));
  }
}
