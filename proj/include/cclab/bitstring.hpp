#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cclab {

/// A finite sequence of bits. The empty string is valid and written "_"
/// in display contexts. Ordering helpers implement shortlex: shorter
/// strings first, ties broken lexicographically with 0 < 1.
class BitString {
 public:
  BitString() = default;

  /// Parse from ASCII '0'/'1'. The token "_" (or "") denotes the empty string.
  static BitString parse(std::string_view s);

  static BitString zeros(std::size_t n);
  static BitString ones(std::size_t n);

  /// The v-th string of length `len` in lexicographic order (MSB first),
  /// so from_index(len, 0) = 0^len. Requires len <= 62 and v < 2^len.
  static BitString from_index(std::size_t len, std::uint64_t v);

  /// Inverse of shortlex_rank().
  static BitString from_rank(std::uint64_t rank);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_[i]; }

  void push_back(int b) { bits_.push_back(static_cast<std::uint8_t>(b & 1)); }
  void append(const BitString& other);
  void reserve(std::size_t n) { bits_.reserve(n); }
  void clear() { bits_.clear(); }

  BitString slice(std::size_t pos, std::size_t len) const;

  /// Position in the shortlex enumeration of all strings: rank(eps)=0,
  /// rank("0")=1, rank("1")=2, rank("00")=3, ... Requires size() <= 62.
  std::uint64_t shortlex_rank() const;

  /// Numeric value of the bits read MSB-first. Requires size() <= 63.
  std::uint64_t to_index() const;

  std::string str() const;                    // "0101"; "" for the empty string
  std::string display() const;                // like str() but "_" for empty

  bool operator==(const BitString& other) const { return bits_ == other.bits_; }
  bool operator!=(const BitString& other) const { return bits_ != other.bits_; }

  friend bool shortlex_less(const BitString& a, const BitString& b);
  /// operator< is shortlex order (within one length this is plain
  /// lexicographic order).
  bool operator<(const BitString& other) const { return shortlex_less(*this, other); }

  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> bits_;
};

bool shortlex_less(const BitString& a, const BitString& b);

/// All strings of length 0..max_len in shortlex order. Intended for small
/// max_len; the oracles iterate by rank instead of materializing this.
std::vector<BitString> enumerate_programs(std::size_t max_len);

}  // namespace cclab

template <>
struct std::hash<cclab::BitString> {
  std::size_t operator()(const cclab::BitString& b) const { return b.hash(); }
};
