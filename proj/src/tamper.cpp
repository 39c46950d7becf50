#include "sipmark/tamper.hpp"

#include <random>

namespace sipmark {

FlowGraph mutate_edges(const FlowGraph& g, std::uint64_t seed,
                       std::uint32_t ops, std::vector<TamperOp>* log) {
  if (ops == 0) throw Error("usage", "ops must be at least 1");
  if (g.node_count() == 0) throw Error("graph", "empty graph");

  // Raw engine draws keep the byte stream identical across platforms.
  std::mt19937_64 rng(seed);
  const std::uint64_t n = g.node_count();
  FlowGraph mutated = g;

  for (std::uint32_t i = 0; i < ops; ++i) {
    const bool can_delete = mutated.edge_count() > 0;
    const bool can_insert = mutated.edge_count() < n * n;
    if (!can_delete && !can_insert) {
      throw Error("graph", "graph admits no edge mutation");
    }
    bool insert = can_insert;
    if (can_delete && can_insert) insert = (rng() & 1) != 0;

    if (insert) {
      while (true) {
        const Edge e{static_cast<std::uint32_t>(rng() % n),
                     static_cast<std::uint32_t>(rng() % n)};
        if (mutated.add_edge(e)) {
          if (log) log->push_back({true, e});
          break;
        }
      }
    } else {
      const std::size_t pick = rng() % mutated.edge_count();
      const Edge e = mutated.edges()[pick];
      mutated.remove_edge(e);
      if (log) log->push_back({false, e});
    }
  }
  return mutated;
}

}  // namespace sipmark
