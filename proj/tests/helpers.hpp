#pragma once

// Small brute-force oracles kept independent of the library under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testutil {

// Direct double application, no reliance on library validation.
inline bool is_involution(const std::vector<std::uint32_t>& p) {
  const std::size_t n = p.size();
  std::vector<std::uint8_t> seen(n + 1, 0);
  for (std::uint32_t v : p) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p[p[i] - 1] != i + 1) return false;
  }
  return true;
}

// Every involution of 1..n, found by filtering all permutations.
inline std::vector<std::vector<std::uint32_t>> all_involutions(std::uint32_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    if (is_involution(perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Uniform-ish accepted watermark: varied bit lengths, never below 2, never
// all ones.
inline std::uint64_t random_accepted_watermark(std::mt19937_64& rng) {
  while (true) {
    const std::uint64_t w = rng() >> (rng() % 64);
    if (w < 2) continue;
    if ((w & (w + 1)) == 0) continue;
    return w;
  }
}

}  // namespace testutil
