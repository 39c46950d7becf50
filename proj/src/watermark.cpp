#include "sipmark/watermark.hpp"

#include <bit>
#include <cstddef>

namespace sipmark {

namespace {

constexpr std::size_t kMaxBits = std::size_t{1} << 30;

}  // namespace

Watermark::Watermark(std::uint64_t value) : value_(value) {
  if (value < 2) {
    throw Error("watermark", "watermark must be an integer >= 2");
  }
  // (value & (value + 1)) == 0 exactly when the binary expansion is all ones;
  // the wrap-around at 2^64-1 lands in the same bucket.
  if ((value & (value + 1)) == 0) {
    throw Error("watermark",
                "unsupported watermark form: binary expansion has no zero bit");
  }
  const int n = std::bit_width(value);
  bits_.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    bits_.push_back(((value >> i) & 1u) != 0);
  }
}

SelfInvertingPermutation::SelfInvertingPermutation(
    std::vector<std::uint32_t> elements)
    : elements_(std::move(elements)) {
  const std::size_t len = elements_.size();
  if (len == 0 || len % 2 == 0) {
    throw Error("sip", "length must be odd and positive");
  }
  std::vector<std::uint8_t> seen(len + 1, 0);
  for (std::uint32_t v : elements_) {
    if (v < 1 || v > len || seen[v]) {
      throw Error("sip", "elements are not a permutation of 1..n");
    }
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (elements_[elements_[i] - 1] != i + 1) {
      throw Error("sip", "permutation is not self-inverting");
    }
  }
}

SelfInvertingPermutation encode_watermark_bits(const std::vector<bool>& bits) {
  const std::size_t n = bits.size();
  if (n < 2) {
    throw Error("watermark", "binary expansion needs at least two digits");
  }
  if (n > kMaxBits) {
    throw Error("watermark", "binary expansion too long");
  }
  if (!bits[0]) {
    throw Error("watermark", "binary expansion must start with a one bit");
  }

  // Positions are 1-based within b1..bn.
  std::vector<std::uint32_t> ones;
  ones.reserve(n);
  std::uint32_t first_zero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i]) {
      ones.push_back(static_cast<std::uint32_t>(i + 1));
    } else if (first_zero == 0) {
      first_zero = static_cast<std::uint32_t>(i + 1);
    }
  }
  if (first_zero == 0) {
    throw Error("watermark",
                "unsupported watermark form: binary expansion has no zero bit");
  }

  const auto un = static_cast<std::uint32_t>(n);
  std::vector<std::uint8_t> taken(n + 2, 0);
  for (std::uint32_t z : ones) taken[z] = 1;
  taken[first_zero] = 1;

  // Two-cycles (i, n+z_i) for the ascending one positions, then
  // (m+j, n+D_j) for the remaining positions of 1..n+1 in descending order;
  // the first zero position supplies the fixed point n+o1.
  std::vector<std::uint32_t> elements(2 * n + 1, 0);
  std::uint32_t next = 1;
  for (std::uint32_t z : ones) {
    elements[next - 1] = un + z;
    elements[un + z - 1] = next;
    ++next;
  }
  for (std::uint32_t pos = un + 1; pos >= 1; --pos) {
    if (taken[pos]) continue;
    elements[next - 1] = un + pos;
    elements[un + pos - 1] = next;
    ++next;
  }
  elements[un + first_zero - 1] = un + first_zero;
  return SelfInvertingPermutation(std::move(elements));
}

SelfInvertingPermutation encode_watermark(std::uint64_t w) {
  return encode_watermark_bits(Watermark(w).bits());
}

std::vector<bool> decode_sip_bits(const SelfInvertingPermutation& p) {
  const std::size_t len = p.length();
  const std::size_t n = (len - 1) / 2;
  if (n == 0) {
    throw Error("sip", "not a watermark permutation: too short");
  }

  // The first n entries hold n + position values; the maximum element sits at
  // slot m+1, which pins down the number of one bits.
  std::size_t max_pos = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint32_t v = p.at(i);
    if (v <= n) {
      throw Error("sip",
                  "not a watermark permutation: leading entries must exceed "
                  "the bit length");
    }
    if (v == len) max_pos = i;
  }
  if (max_pos == 0) {
    throw Error("sip",
                "not a watermark permutation: maximum element is not among "
                "the leading entries");
  }
  const std::size_t m = max_pos - 1;
  if (m == 0) {
    throw Error("sip", "not a watermark permutation: no one bits");
  }

  std::vector<bool> bits(n, false);
  std::uint32_t prev = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::uint32_t z = p.at(i) - static_cast<std::uint32_t>(n);
    if (z > n || z <= prev) {
      throw Error("sip",
                  "not a watermark permutation: one positions are not "
                  "ascending");
    }
    bits[z - 1] = true;
    prev = z;
  }
  if (!bits[0]) {
    throw Error("sip", "not a watermark permutation: leading bit is zero");
  }

  if (encode_watermark_bits(bits) != p) {
    throw Error("sip", "not a watermark permutation: reconstruction mismatch");
  }
  return bits;
}

std::uint64_t decode_sip(const SelfInvertingPermutation& p) {
  const std::vector<bool> bits = decode_sip_bits(p);
  if (bits.size() > 64) {
    throw Error("sip", "watermark exceeds 64 bits");
  }
  std::uint64_t value = 0;
  for (bool b : bits) value = (value << 1) | (b ? 1u : 0u);
  return value;
}

}  // namespace sipmark
