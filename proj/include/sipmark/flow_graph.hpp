#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sipmark/error.hpp"

namespace sipmark {

struct Edge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed graph on dense node ids 0..N-1. The edge list is kept sorted and
// duplicate-free; antiparallel pairs and self-loops are representable.
class FlowGraph {
 public:
  FlowGraph(std::uint32_t node_count, std::vector<Edge> edges);

  std::uint32_t node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Edge e) const;
  bool add_edge(Edge e);     // false if already present
  bool remove_edge(Edge e);  // false if absent

  std::uint32_t out_degree(std::uint32_t node) const;
  std::uint32_t in_degree(std::uint32_t node) const;

  // The node with no outgoing edges, when there is exactly one.
  std::optional<std::uint32_t> unique_sink() const;

  friend bool operator==(const FlowGraph&, const FlowGraph&) = default;

 private:
  std::uint32_t node_count_ = 0;
  std::vector<Edge> edges_;
};

struct HamiltonianPath {
  std::vector<std::uint32_t> nodes;  // source first, sink last
};

// Recovers the unique Hamiltonian path by peeling backwards from the unique
// sink: at every step exactly one predecessor of the current node is still
// unplaced, and that node comes next. Any choice point is an error.
HamiltonianPath find_hamiltonian_path(const FlowGraph& g);

// Renames nodes so the path runs N-1, N-2, ..., 1, 0 (source gets N-1, sink
// gets 0). h must be a Hamiltonian path of g.
FlowGraph relabel_from_path(const FlowGraph& g, const HamiltonianPath& h);

// find_hamiltonian_path followed by relabel_from_path.
FlowGraph canonicalize(const FlowGraph& g);

// Applies a node-id bijection: node v becomes mapping[v].
FlowGraph apply_node_permutation(const FlowGraph& g,
                                 const std::vector<std::uint32_t>& mapping);

// Collapses the graph with the two classic flow-graph transformations
// (drop self-loops; absorb a node into its unique predecessor) and reports
// whether a single node remains. Every node must be reachable from source.
bool check_reducible(const FlowGraph& g, std::uint32_t source);

// Convenience overload: the serialized form puts the source last.
bool check_reducible(const FlowGraph& g);

}  // namespace sipmark
