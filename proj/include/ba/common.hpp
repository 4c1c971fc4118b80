#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ba {

// Invalid run parameters (bad n/t/c ranges, reducible polynomial, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A protocol safety property failed. Never expected; callers translate this
// into a loud nonzero exit.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

inline void invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

// Packed bit string. Bit 0 is the MSB of byte 0 in the hex dump, and
// push_bits() appends the most significant of `width` bits first, so the
// serialized form reads left to right.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(size_t i) const {
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
  }
  void set(size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (63 - (i & 63));
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (63 - (i & 63)); }

  void push_bit(bool v) {
    if ((nbits_ & 63) == 0) words_.push_back(0);
    ++nbits_;
    if (v) set(nbits_ - 1, true);
  }
  // Appends the low `width` bits of v, most significant first.
  void push_bits(uint64_t v, int width) {
    for (int k = width - 1; k >= 0; --k) push_bit((v >> k) & 1u);
  }
  // Reads `width` bits starting at `pos` (must be in range).
  uint64_t get_bits(size_t pos, int width) const {
    uint64_t v = 0;
    for (int k = 0; k < width; ++k) v = (v << 1) | uint64_t(get(pos + k));
    return v;
  }
  void append(const BitVec& other) {
    for (size_t i = 0; i < other.size(); ++i) push_bit(other.get(i));
  }
  // Truncates or zero-extends to exactly nbits.
  void resize(size_t nbits) {
    words_.resize((nbits + 63) / 64, 0);
    if (nbits < nbits_ && (nbits & 63) != 0) {
      // clear dropped tail bits inside the last kept word
      uint64_t keep = ~uint64_t{0} << (64 - (nbits & 63));
      words_[nbits >> 6] &= keep;
    }
    nbits_ = nbits;
  }

  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    size_t nbytes = (nbits_ + 7) / 8;
    s.reserve(nbytes * 2);
    for (size_t b = 0; b < nbytes; ++b) {
      unsigned byte = 0;
      for (size_t k = 0; k < 8; ++k) {
        size_t i = b * 8 + k;
        byte = (byte << 1) | (i < nbits_ ? unsigned(get(i)) : 0u);
      }
      s.push_back(digits[byte >> 4]);
      s.push_back(digits[byte & 0xF]);
    }
    return s;
  }

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

// splitmix64: seed expansion for deterministic per-component generators.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace ba
