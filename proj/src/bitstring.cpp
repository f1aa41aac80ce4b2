#include "cclab/bitstring.hpp"

#include <stdexcept>

namespace cclab {

BitString BitString::parse(std::string_view s) {
  BitString out;
  if (s == "_") return out;
  out.bits_.reserve(s.size());
  for (char c : s) {
    if (c == '0') {
      out.bits_.push_back(0);
    } else if (c == '1') {
      out.bits_.push_back(1);
    } else {
      throw std::invalid_argument("bit string may contain only '0'/'1' (or be \"_\" for the empty string)");
    }
  }
  return out;
}

BitString BitString::zeros(std::size_t n) {
  BitString out;
  out.bits_.assign(n, 0);
  return out;
}

BitString BitString::ones(std::size_t n) {
  BitString out;
  out.bits_.assign(n, 1);
  return out;
}

BitString BitString::from_index(std::size_t len, std::uint64_t v) {
  assert(len <= 62);
  assert(len == 62 || v < (1ull << len));
  BitString out;
  out.bits_.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.bits_[i] = static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1);
  }
  return out;
}

BitString BitString::from_rank(std::uint64_t rank) {
  std::size_t len = 0;
  while ((2ull << len) - 1 <= rank) ++len;
  std::uint64_t v = rank - ((1ull << len) - 1);
  return from_index(len, v);
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  assert(pos + len <= bits_.size());
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                   bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

std::uint64_t BitString::shortlex_rank() const {
  assert(size() <= 62);
  return ((1ull << size()) - 1) + to_index();
}

std::uint64_t BitString::to_index() const {
  assert(size() <= 63);
  std::uint64_t v = 0;
  for (std::uint8_t b : bits_) v = (v << 1) | b;
  return v;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string BitString::display() const { return bits_.empty() ? "_" : str(); }

std::size_t BitString::hash() const {
  // FNV-1a over the bits, mixed with the length so "0" and "00" differ.
  std::size_t h = 1469598103934665603ull;
  h = (h ^ bits_.size()) * 1099511628211ull;
  for (std::uint8_t b : bits_) h = (h ^ b) * 1099511628211ull;
  return h;
}

bool shortlex_less(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits_ < b.bits_;
}

std::vector<BitString> enumerate_programs(std::size_t max_len) {
  std::vector<BitString> out;
  out.reserve((max_len < 62) ? ((2ull << max_len) - 1) : 0);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      out.push_back(BitString::from_index(len, v));
    }
  }
  return out;
}

}  // namespace cclab
