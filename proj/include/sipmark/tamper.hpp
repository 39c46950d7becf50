#pragma once

#include <cstdint>
#include <vector>

#include "sipmark/flow_graph.hpp"

namespace sipmark {

struct TamperOp {
  bool inserted = false;  // false means the edge was deleted
  Edge edge;
};

// Applies `ops` seeded random edge mutations, each either deleting a present
// edge or inserting an absent one (self-loops included). Fully deterministic
// for a given seed and input graph.
FlowGraph mutate_edges(const FlowGraph& g, std::uint64_t seed,
                       std::uint32_t ops, std::vector<TamperOp>* log = nullptr);

}  // namespace sipmark
