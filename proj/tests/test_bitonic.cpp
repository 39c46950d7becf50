#include "sipmark/bitonic.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sipmark/watermark.hpp"

using namespace sipmark;

namespace {

std::vector<std::uint32_t> V(std::initializer_list<std::uint32_t> v) {
  return std::vector<std::uint32_t>(v);
}

}  // namespace

TEST_CASE("classify recognizes the three run kinds") {
  CHECK(classify(V({2, 7})) == BitonicKind::kIncreasing);
  CHECK(classify(V({4, 3})) == BitonicKind::kDecreasing);
  CHECK(classify(V({5})) == BitonicKind::kDecreasing);
  CHECK(classify(V({5, 6, 8, 9, 1})) == BitonicKind::kFull);
  CHECK(to_string(BitonicKind::kFull) == std::string("full"));
}

TEST_CASE("classify rejects sequences that fall and rise again") {
  CHECK_THROWS_WITH_AS(classify(V({3, 1, 2})),
                       doctest::Contains("not bitonic"), Error);
  CHECK_THROWS_WITH_AS(classify(V({1, 3, 2, 4})),
                       doctest::Contains("not bitonic"), Error);
  CHECK_THROWS_AS(classify(V({})), Error);
}

TEST_CASE("greedy decomposition of known permutations") {
  SUBCASE("w = 20") {
    const auto d = decompose_bitonic(encode_watermark(20));
    REQUIRE(d.k() == 3);
    CHECK(d.subsequences[0].elements == V({6, 8, 11, 10, 9, 1}));
    CHECK(d.subsequences[0].kind == BitonicKind::kFull);
    CHECK(d.subsequences[0].top == 11);
    CHECK(d.subsequences[0].top_index == 3);
    CHECK(d.subsequences[1].elements == V({7, 2}));
    CHECK(d.subsequences[1].kind == BitonicKind::kDecreasing);
    CHECK(d.subsequences[2].elements == V({5, 4, 3}));
    CHECK(d.subsequences[2].kind == BitonicKind::kDecreasing);
    CHECK(d.tops_strictly_decreasing());
  }
  SUBCASE("w = 45") {
    const auto d = decompose_bitonic(encode_watermark(45));
    REQUIRE(d.k() == 4);
    CHECK(d.subsequences[0].elements == V({7, 9, 10, 12, 13, 11, 1}));
    CHECK(d.subsequences[0].top == 13);
    CHECK(d.subsequences[0].top_index == 5);
    CHECK(d.subsequences[1].elements == V({8, 2}));
    CHECK(d.subsequences[2].elements == V({3, 6, 4}));
    CHECK(d.subsequences[2].kind == BitonicKind::kFull);
    CHECK(d.subsequences[2].top == 6);
    CHECK(d.subsequences[3].elements == V({5}));
    CHECK(d.subsequences[3].kind == BitonicKind::kDecreasing);
  }
  SUBCASE("w = 54") {
    const auto d = decompose_bitonic(encode_watermark(54));
    REQUIRE(d.k() == 3);
    CHECK(d.subsequences[0].elements == V({7, 8, 10, 11, 13, 12, 1}));
    CHECK(d.subsequences[1].elements == V({2, 9, 3}));
    CHECK(d.subsequences[1].kind == BitonicKind::kFull);
    CHECK(d.subsequences[2].elements == V({4, 6, 5}));
    CHECK(d.subsequences[2].kind == BitonicKind::kFull);
  }
  SUBCASE("w = 2") {
    const auto d = decompose_bitonic(encode_watermark(2));
    REQUIRE(d.k() == 2);
    CHECK(d.subsequences[0].elements == V({3, 5, 1}));
    CHECK(d.subsequences[1].elements == V({4, 2}));
  }
}

TEST_CASE("decomposition records start positions and tiles the input") {
  const auto p = encode_watermark(45);
  const auto d = decompose_bitonic(p);
  CHECK(d.concatenated() == p.elements());
  std::size_t expected_start = 1;
  for (const auto& sub : d.subsequences) {
    CHECK(sub.start_index == expected_start);
    expected_start += sub.elements.size();
  }
  CHECK(expected_start == p.length() + 1);
}

TEST_CASE("property reports for every length-3 involution") {
  struct Expected {
    std::vector<std::uint32_t> perm;
    bool shape, extremes, anchor;
  };
  const Expected table[] = {
      {{1, 2, 3}, false, false, true},
      {{2, 1, 3}, false, false, false},
      {{3, 2, 1}, false, false, true},
      {{1, 3, 2}, true, false, true},
  };
  const auto all = testutil::all_involutions(3);
  REQUIRE(all.size() == 4);
  for (const auto& e : table) {
    CAPTURE(e.perm);
    const SelfInvertingPermutation p(e.perm);
    const auto report = check_properties(decompose_bitonic(p), p);
    CHECK(report.shape_ok == e.shape);
    CHECK(report.extremes_ok == e.extremes);
    CHECK(report.anchor_ok == e.anchor);
    CHECK(report.all_pass() == (e.shape && e.extremes && e.anchor));
  }
}

TEST_CASE("property failures carry readable messages") {
  const SelfInvertingPermutation p(V({2, 1, 3}));
  const auto report = check_properties(decompose_bitonic(p), p);
  REQUIRE_FALSE(report.all_pass());
  bool saw_shape = false, saw_max = false;
  for (const auto& f : report.failures) {
    if (f.find("not full-bitonic") != std::string::npos) saw_shape = true;
    if (f.find("misses the maximum") != std::string::npos) saw_max = true;
  }
  CHECK(saw_shape);
  CHECK(saw_max);
}

TEST_CASE("an increasing middle run breaks the shape property") {
  const SelfInvertingPermutation p(V({3, 5, 1, 4, 2}));
  BitonicDecomposition d;
  d.subsequences.push_back(
      {V({3, 5, 1}), BitonicKind::kFull, 5, 2, 1});
  d.subsequences.push_back(
      {V({2, 4}), BitonicKind::kIncreasing, 4, 2, 4});
  d.subsequences.push_back(
      {V({2}), BitonicKind::kDecreasing, 2, 1, 6});
  const auto report = check_properties(d, p);
  CHECK_FALSE(report.shape_ok);
  bool saw = false;
  for (const auto& f : report.failures) {
    if (f.find("middle run 2 rises") != std::string::npos) saw = true;
  }
  CHECK(saw);
}

TEST_CASE("encoded permutations satisfy the run properties") {
  std::mt19937_64 rng(0xb170u);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t w = testutil::random_accepted_watermark(rng);
    CAPTURE(w);
    const auto p = encode_watermark(w);
    const auto d = decompose_bitonic(p);
    REQUIRE(d.k() >= 2);
    const auto report = check_properties(d, p);
    CHECK(report.all_pass());
    CHECK(d.tops_strictly_decreasing());
    CHECK(d.subsequences.front().elements.back() == 1);
    CHECK(d.subsequences.front().elements.size() == (p.length() + 1) / 2);
    CHECK(d.concatenated() == p.elements());
  }
}

TEST_CASE("tops_strictly_decreasing detects violations") {
  const auto d = decompose_bitonic(V({2, 1, 3}));
  REQUIRE(d.k() == 2);
  CHECK(d.subsequences[0].top == 2);
  CHECK(d.subsequences[1].top == 3);
  CHECK_FALSE(d.tops_strictly_decreasing());
}
