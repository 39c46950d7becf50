#pragma once

#include <cstdint>
#include <vector>

#include "sipmark/error.hpp"

namespace sipmark {

// Watermark payload: a positive integer together with its binary expansion,
// most significant bit first. The leading bit is always 1, and at least one
// bit must be 0; all-ones values have no zero bit to anchor the fixed point
// of the permutation and are rejected as an unsupported form.
class Watermark {
 public:
  explicit Watermark(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  const std::vector<bool>& bits() const { return bits_; }
  std::size_t bit_length() const { return bits_.size(); }

 private:
  std::uint64_t value_ = 0;
  std::vector<bool> bits_;
};

// Permutation of 1..n, odd n, equal to its own inverse. Every cycle has
// length one or two, so an odd-length instance always has a fixed point.
class SelfInvertingPermutation {
 public:
  // Validates range, distinctness, odd length and self-inversion.
  explicit SelfInvertingPermutation(std::vector<std::uint32_t> elements);

  std::size_t length() const { return elements_.size(); }
  std::uint32_t at(std::size_t i) const { return elements_[i - 1]; }  // 1-based
  const std::vector<std::uint32_t>& elements() const { return elements_; }

  friend bool operator==(const SelfInvertingPermutation&,
                         const SelfInvertingPermutation&) = default;

 private:
  std::vector<std::uint32_t> elements_;
};

// Maps a watermark number to a self-inverting permutation of length 2n+1,
// where n is the bit length of the number.
SelfInvertingPermutation encode_watermark(std::uint64_t w);

// Same construction on a raw MSB-first bit string. This is the working core;
// it has no 64-bit cap, so callers can build arbitrarily long permutations.
SelfInvertingPermutation encode_watermark_bits(const std::vector<bool>& bits);

// Recovers the watermark number. Rejects permutations that did not come out
// of encode_watermark by re-encoding the candidate and comparing.
std::uint64_t decode_sip(const SelfInvertingPermutation& p);

// Bit-string counterpart of decode_sip.
std::vector<bool> decode_sip_bits(const SelfInvertingPermutation& p);

}  // namespace sipmark
