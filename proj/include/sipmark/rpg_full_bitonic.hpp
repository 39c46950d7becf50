#pragma once

#include "sipmark/rpg_bitonic.hpp"

namespace sipmark {

// Second embedding variant. Starts from the first variant and, for every
// full-bitonic run after the first, replaces the top-to-header edge with an
// edge to the previous run's top. That trims the header's in-degree while
// keeping all non-chain edges pointing upward, so reducibility and the unique
// Hamiltonian path survive. When no later run is full-bitonic the two
// variants coincide.
FlowGraph encode_f2(const SelfInvertingPermutation& p);

// Inverse of encode_f2. Identical to decode_f1 except that redirected tops
// are recovered first: any flipped edge whose head still has out-degree two
// or more marks that head as a run top, and the edge is dropped before the
// strands are walked.
SelfInvertingPermutation decode_f2(const FlowGraph& g,
                                   DecodeTrace* trace = nullptr);

}  // namespace sipmark
