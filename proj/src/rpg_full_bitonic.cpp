#include "sipmark/rpg_full_bitonic.hpp"

#include "rpg_detail.hpp"

namespace sipmark {

FlowGraph encode_f2(const SelfInvertingPermutation& p) {
  const BitonicDecomposition d = decompose_bitonic(p);
  detail::validate_encodable(d, p);
  return detail::build_rpg(d, static_cast<std::uint32_t>(p.length()),
                           /*redirect_full_tops=*/true);
}

SelfInvertingPermutation decode_f2(const FlowGraph& g, DecodeTrace* trace) {
  return detail::decode_rpg(g, /*redirected_tops=*/true, trace);
}

}  // namespace sipmark
