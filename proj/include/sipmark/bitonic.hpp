#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sipmark/watermark.hpp"

namespace sipmark {

// Shape of a sequence that strictly rises and then strictly falls.
// The maximum can sit at the end (rising only), at the front (falling only),
// or strictly inside. A single element counts as falling-only: its node keeps
// a direct edge to the graph header, which the second codec variant relies on.
enum class BitonicKind {
  kIncreasing,  // maximum is the last element
  kDecreasing,  // maximum is the first element (includes singletons)
  kFull,        // maximum is strictly interior
};

const char* to_string(BitonicKind kind);

struct BitonicSubsequence {
  std::vector<std::uint32_t> elements;
  BitonicKind kind = BitonicKind::kDecreasing;
  std::uint32_t top = 0;       // maximum element
  std::size_t top_index = 0;   // 1-based position of the maximum, within this run
  std::size_t start_index = 0; // 1-based position of the run, within the input
};

struct BitonicDecomposition {
  std::vector<BitonicSubsequence> subsequences;

  std::size_t k() const { return subsequences.size(); }
  bool tops_strictly_decreasing() const;
  std::vector<std::uint32_t> concatenated() const;
};

// Classifies one bitonic sequence; rejects input that is not rise-then-fall.
BitonicKind classify(std::span<const std::uint32_t> b);

// Greedy left-to-right split into maximal rise-then-fall runs: each run is
// extended through its rising and falling phase and cut as soon as the next
// element rises again. Concatenating the runs restores the input.
BitonicDecomposition decompose_bitonic(std::span<const std::uint32_t> seq);
BitonicDecomposition decompose_bitonic(const SelfInvertingPermutation& p);

struct PropertyReport {
  bool shape_ok = false;    // first run full, middle runs full or falling-only
  bool extremes_ok = false; // first run holds max and min and has length ceil(n/2)
  bool anchor_ok = false;   // last element overall equals the max's index in the first run
  std::vector<std::string> failures;

  bool all_pass() const { return shape_ok && extremes_ok && anchor_ok; }
};

// Checks the three structural properties the graph codecs depend on.
PropertyReport check_properties(const BitonicDecomposition& d,
                                const SelfInvertingPermutation& p);

}  // namespace sipmark
