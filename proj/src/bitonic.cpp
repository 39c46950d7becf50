#include "sipmark/bitonic.hpp"

#include <algorithm>

namespace sipmark {

const char* to_string(BitonicKind kind) {
  switch (kind) {
    case BitonicKind::kIncreasing: return "increasing";
    case BitonicKind::kDecreasing: return "decreasing";
    case BitonicKind::kFull: return "full";
  }
  return "unknown";
}

bool BitonicDecomposition::tops_strictly_decreasing() const {
  for (std::size_t i = 1; i < subsequences.size(); ++i) {
    if (subsequences[i].top >= subsequences[i - 1].top) return false;
  }
  return true;
}

std::vector<std::uint32_t> BitonicDecomposition::concatenated() const {
  std::vector<std::uint32_t> out;
  for (const auto& sub : subsequences) {
    out.insert(out.end(), sub.elements.begin(), sub.elements.end());
  }
  return out;
}

namespace {

BitonicKind kind_for(std::size_t length, std::size_t top_index) {
  if (length == 1 || top_index == 1) return BitonicKind::kDecreasing;
  if (top_index == length) return BitonicKind::kIncreasing;
  return BitonicKind::kFull;
}

}  // namespace

BitonicKind classify(std::span<const std::uint32_t> b) {
  if (b.empty()) {
    throw Error("decompose", "cannot classify an empty sequence");
  }
  const std::size_t top = static_cast<std::size_t>(
      std::max_element(b.begin(), b.end()) - b.begin());
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const bool rising = b[i] < b[i + 1];
    if (i < top ? !rising : rising) {
      throw Error("decompose", "sequence is not bitonic");
    }
  }
  return kind_for(b.size(), top + 1);
}

BitonicDecomposition decompose_bitonic(std::span<const std::uint32_t> seq) {
  BitonicDecomposition d;
  std::size_t i = 0;
  while (i < seq.size()) {
    std::size_t j = i;
    while (j + 1 < seq.size() && seq[j + 1] > seq[j]) ++j;
    const std::size_t peak = j;
    while (j + 1 < seq.size() && seq[j + 1] < seq[j]) ++j;

    BitonicSubsequence sub;
    sub.elements.assign(seq.begin() + i, seq.begin() + j + 1);
    sub.top = seq[peak];
    sub.top_index = peak - i + 1;
    sub.start_index = i + 1;
    sub.kind = kind_for(sub.elements.size(), sub.top_index);
    d.subsequences.push_back(std::move(sub));
    i = j + 1;
  }
  return d;
}

BitonicDecomposition decompose_bitonic(const SelfInvertingPermutation& p) {
  return decompose_bitonic(std::span<const std::uint32_t>(p.elements()));
}

PropertyReport check_properties(const BitonicDecomposition& d,
                                const SelfInvertingPermutation& p) {
  PropertyReport report;
  const auto& subs = d.subsequences;
  if (subs.empty()) {
    report.failures.emplace_back("decomposition is empty");
    return report;
  }
  const std::uint32_t max_element = static_cast<std::uint32_t>(p.length());

  report.shape_ok = true;
  if (subs.front().kind != BitonicKind::kFull) {
    report.shape_ok = false;
    report.failures.emplace_back("first run is not full-bitonic");
  }
  for (std::size_t i = 1; i + 1 < subs.size(); ++i) {
    if (subs[i].kind == BitonicKind::kIncreasing) {
      report.shape_ok = false;
      report.failures.emplace_back("middle run " + std::to_string(i + 1) +
                                   " rises to its maximum");
    }
  }

  const auto& first = subs.front().elements;
  const bool has_max =
      std::find(first.begin(), first.end(), max_element) != first.end();
  const bool has_min = std::find(first.begin(), first.end(), 1u) != first.end();
  const std::size_t want_len = (p.length() + 1) / 2;
  report.extremes_ok = has_max && has_min && first.size() == want_len;
  if (!has_max) report.failures.emplace_back("first run misses the maximum");
  if (!has_min) report.failures.emplace_back("first run misses the minimum");
  if (first.size() != want_len) {
    report.failures.emplace_back(
        "first run has length " + std::to_string(first.size()) +
        ", expected " + std::to_string(want_len));
  }

  report.anchor_ok = false;
  if (has_max) {
    const std::size_t max_index = static_cast<std::size_t>(
        std::find(first.begin(), first.end(), max_element) - first.begin() + 1);
    const std::uint32_t last = subs.back().elements.back();
    report.anchor_ok = last == max_index;
    if (!report.anchor_ok) {
      report.failures.emplace_back(
          "last element " + std::to_string(last) +
          " does not match the maximum's position " +
          std::to_string(max_index) + " in the first run");
    }
  } else {
    report.failures.emplace_back(
        "anchor undefined: first run misses the maximum");
  }
  return report;
}

}  // namespace sipmark
