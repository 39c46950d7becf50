#include "sipmark/rpg_bitonic.hpp"

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

FlowGraph graph_with(std::uint32_t nodes, std::initializer_list<Edge> edges) {
  return FlowGraph(nodes, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("encoded graph for w = 20 matches the frozen edge set") {
  const auto g = encode_f1(encode_watermark(20));
  CHECK(g.node_count() == 13);
  const std::vector<Edge> expected{
      {1, 0}, {1, 9},  {2, 1},  {2, 7},  {3, 2},   {3, 4},
      {4, 3}, {4, 5},  {5, 4},  {5, 12}, {6, 5},   {6, 8},
      {7, 6}, {7, 12}, {8, 7},  {8, 11}, {9, 8},   {9, 10},
      {10, 9}, {10, 11}, {11, 10}, {11, 12}, {12, 11}};
  CHECK(g.edges() == expected);
}

TEST_CASE("encoded graph for w = 2 matches the frozen edge set") {
  const auto g = encode_f1(encode_watermark(2));
  CHECK(g.node_count() == 7);
  const std::vector<Edge> expected{{1, 0}, {1, 5}, {2, 1}, {2, 4},
                                   {3, 2}, {3, 5}, {4, 3}, {4, 6},
                                   {5, 4}, {5, 6}, {6, 5}};
  CHECK(g.edges() == expected);
}

TEST_CASE("graph dimensions and degrees follow the permutation length") {
  std::mt19937_64 rng(0xf100u);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t w = testutil::random_accepted_watermark(rng);
    CAPTURE(w);
    const auto p = encode_watermark(w);
    const auto d = decompose_bitonic(p);
    const auto g = encode_f1(p);
    const auto len = static_cast<std::uint32_t>(p.length());

    CHECK(g.node_count() == len + 2);
    CHECK(g.edge_count() == 2 * static_cast<std::size_t>(len) + 1);
    CHECK(g.out_degree(0) == 0);
    CHECK(g.out_degree(len + 1) == 1);
    CHECK(g.in_degree(len + 1) == d.k());
    CHECK(g.in_degree(0) == 1);
    for (std::uint32_t v = 1; v <= len; ++v) CHECK(g.out_degree(v) == 2);
  }
}

TEST_CASE("decode trace for w = 20") {
  const auto g = encode_f1(encode_watermark(20));
  DecodeTrace trace;
  const auto p = decode_f1(g, &trace);
  CHECK(p == encode_watermark(20));

  CHECK(trace.tops_from_source == V({5, 7, 11}));
  CHECK(trace.tops_redirected.empty());
  CHECK(trace.tops_descending == V({11, 7, 5}));
  REQUIRE(trace.slices.size() == 3);
  CHECK(trace.slices[0] == V({6, 8, 11, 10, 9, 1}));
  CHECK(trace.slices[1] == V({7, 2}));
  CHECK(trace.slices[2] == V({5, 4, 3}));
  CHECK(trace.walk_starts == V({1, 7, 3}));
  CHECK(trace.first_slice_max_index == 3);
}

TEST_CASE("encode and decode round-trip") {
  for (std::uint64_t w : {2ull, 20ull, 45ull, 54ull}) {
    const auto p = encode_watermark(w);
    CHECK(decode_f1(encode_f1(p)) == p);
  }
  std::mt19937_64 rng(0xf101u);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t w = testutil::random_accepted_watermark(rng);
    CAPTURE(w);
    const auto p = encode_watermark(w);
    const auto back = decode_f1(encode_f1(p));
    CHECK(back == p);
    CHECK(decode_sip(back) == w);
  }
}

TEST_CASE("every accepted involution of small lengths round-trips") {
  std::size_t accepted = 0;
  for (std::size_t n : {5u, 7u, 9u}) {
    for (const auto& elements : testutil::all_involutions(n)) {
      const SelfInvertingPermutation p(elements);
      FlowGraph g(1, {});
      try {
        g = encode_f1(p);
      } catch (const Error& e) {
        CHECK(e.stage() == "encode");
        continue;
      }
      ++accepted;
      CHECK(decode_f1(g) == p);
    }
  }
  CHECK(accepted >= 1 + 3 + 7);

  // Every watermark whose image has these lengths is among the accepted.
  for (std::uint64_t w : {2ull, 4ull, 5ull, 6ull, 8ull, 10ull, 14ull}) {
    CHECK_NOTHROW(encode_f1(encode_watermark(w)));
  }
}

TEST_CASE("dropping or adding any single edge is rejected") {
  const auto g = encode_f1(encode_watermark(20));
  for (const Edge& e : g.edges()) {
    FlowGraph damaged = g;
    REQUIRE(damaged.remove_edge(e));
    CHECK_THROWS_AS(decode_f1(damaged), Error);
  }
  FlowGraph extra = g;
  REQUIRE(extra.add_edge({2, 9}));
  CHECK_THROWS_AS(decode_f1(extra), Error);
}

TEST_CASE("count-preserving corruption is caught") {
  FlowGraph g = encode_f1(encode_watermark(20));
  REQUIRE(g.remove_edge({11, 12}));
  REQUIRE(g.add_edge({6, 12}));
  CHECK_THROWS_AS(decode_f1(g), Error);
}

TEST_CASE("decode rejects malformed graphs") {
  SUBCASE("too small") {
    CHECK_THROWS_WITH_AS(decode_f1(graph_with(2, {{1, 0}})),
                         doctest::Contains("too small"), Error);
  }
  SUBCASE("edge count") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(4, {{1, 0}, {2, 1}, {3, 2}})),
        doctest::Contains("edge count"), Error);
  }
  SUBCASE("broken chain") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(5, {{1, 0}, {2, 1}, {4, 3}, {1, 2}, {2, 3},
                                 {3, 4}, {2, 4}})),
        doctest::Contains("chain is broken"), Error);
  }
  SUBCASE("downward stray edge") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(5, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {2, 3},
                                 {3, 0}, {3, 4}})),
        doctest::Contains("stray edge"), Error);
  }
  SUBCASE("sink with an outgoing edge") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(5, {{0, 2}, {1, 0}, {2, 1}, {3, 2}, {4, 3},
                                 {2, 4}, {3, 4}})),
        doctest::Contains("sink node"), Error);
  }
  SUBCASE("no header edge") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(5, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {1, 2},
                                 {2, 3}, {1, 3}})),
        doctest::Contains("no edges into the header"), Error);
  }
  SUBCASE("branching strand") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(6, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                                 {1, 4}, {2, 4}, {3, 4}, {4, 5}})),
        doctest::Contains("strand branches"), Error);
  }
  SUBCASE("strand cycle") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(6, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                                 {1, 2}, {1, 3}, {2, 3}, {4, 5}})),
        doctest::Contains("forms a cycle"), Error);
  }
  SUBCASE("single run") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(5, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {1, 3},
                                 {2, 3}, {3, 4}})),
        doctest::Contains("fewer than two runs"), Error);
  }
  SUBCASE("two tops on one strand") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(7, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                                 {6, 5}, {1, 2}, {2, 5}, {2, 6}, {3, 4},
                                 {5, 6}})),
        doctest::Contains("two run tops"), Error);
  }
  SUBCASE("walk start blocked") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(7, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                                 {6, 5}, {1, 2}, {2, 4}, {3, 5}, {4, 6},
                                 {5, 6}})),
        doctest::Contains("not a strand endpoint"), Error);
  }
  SUBCASE("final strand start mismatch") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(7, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                                 {6, 5}, {1, 3}, {3, 5}, {2, 4}, {4, 6},
                                 {5, 6}})),
        doctest::Contains("final strand"), Error);
  }
  SUBCASE("walks end in a non-involution") {
    CHECK_THROWS_WITH_AS(
        decode_f1(graph_with(7, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4},
                                 {6, 5}, {1, 3}, {2, 4}, {3, 6}, {4, 6},
                                 {5, 6}})),
        doctest::Contains("not a self-inverting permutation"), Error);
  }
}
