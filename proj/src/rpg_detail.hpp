#pragma once

#include "sipmark/bitonic.hpp"
#include "sipmark/flow_graph.hpp"
#include "sipmark/rpg_bitonic.hpp"

namespace sipmark::detail {

// Shared encoder validation: the run properties must all hold, tops must
// strictly decrease, the first run must end at the minimum, and middle
// full-bitonic runs must start at their minimum. The latter two pin the run
// orientations the decoder's endpoint rules reconstruct.
void validate_encodable(const BitonicDecomposition& d,
                        const SelfInvertingPermutation& p);

// Builds either graph variant in one sorted pass.
FlowGraph build_rpg(const BitonicDecomposition& d, std::uint32_t len,
                    bool redirect_full_tops);

// Shared decoder; redirected_tops selects the second variant's extra phase.
SelfInvertingPermutation decode_rpg(const FlowGraph& g, bool redirected_tops,
                                    DecodeTrace* trace);

}  // namespace sipmark::detail
