#pragma once

#include <cstdint>
#include <vector>

#include "sipmark/bitonic.hpp"
#include "sipmark/flow_graph.hpp"
#include "sipmark/watermark.hpp"

namespace sipmark {

// Intermediate decoder state, exposed for inspection and tests. Filled in
// progressively, so on error it holds whatever was recovered up to the throw.
struct DecodeTrace {
  std::vector<std::uint32_t> tops_from_source;  // run tops wired to the header, ascending
  std::vector<std::uint32_t> tops_redirected;   // run tops found via redirect edges, ascending
  std::vector<std::uint32_t> tops_descending;   // both sets merged, descending
  std::vector<std::vector<std::uint32_t>> slices;  // recovered runs, output orientation
  std::vector<std::uint32_t> walk_starts;          // chosen walk start per run
  std::uint32_t first_slice_max_index = 0;  // 1-based position of the maximum in slice 1
};

// Flow-graph embedding of a self-inverting permutation, first variant.
//
// Nodes 0..n+1 form a chain N-1 -> N-2 -> ... -> 0 (node N-1 is the header,
// node 0 the sink, and node i carries permutation element i). Every bitonic
// run contributes one edge from its top to the header plus one edge per
// neighbouring element pair, always from the smaller to the larger label, so
// all non-chain edges point upward and the graph stays reducible with a
// unique Hamiltonian path.
FlowGraph encode_f1(const SelfInvertingPermutation& p);

// Inverse of encode_f1. Strips the chain, flips the remaining edges, reads
// the run tops off the header, and walks each strand back into a run. The
// first and last strands come out reversed; the walk start of the last one is
// the position of the maximum inside the first recovered run.
SelfInvertingPermutation decode_f1(const FlowGraph& g,
                                   DecodeTrace* trace = nullptr);

}  // namespace sipmark
