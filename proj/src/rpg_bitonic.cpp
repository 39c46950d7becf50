#include "sipmark/rpg_bitonic.hpp"

#include <algorithm>

#include "rpg_detail.hpp"

namespace sipmark {

namespace detail {

void validate_encodable(const BitonicDecomposition& d,
                        const SelfInvertingPermutation& p) {
  const PropertyReport report = check_properties(d, p);
  if (!report.all_pass()) {
    throw Error("encode", "run properties do not hold: " +
                              (report.failures.empty() ? std::string("unknown")
                                                       : report.failures.front()));
  }
  if (!d.tops_strictly_decreasing()) {
    throw Error("encode", "run tops must strictly decrease");
  }
  const auto& subs = d.subsequences;
  if (subs.front().elements.back() != 1) {
    throw Error("encode", "first run must end at the minimum element");
  }
  for (std::size_t i = 1; i + 1 < subs.size(); ++i) {
    const auto& run = subs[i].elements;
    if (subs[i].kind == BitonicKind::kFull && run.front() > run.back()) {
      throw Error("encode", "middle full-bitonic run must start at its minimum");
    }
  }
}

FlowGraph build_rpg(const BitonicDecomposition& d, std::uint32_t len,
                    bool redirect_full_tops) {
  const std::uint32_t header = len + 1;

  // Exactly one upward edge leaves each of the nodes 1..len: neighbour pairs
  // point from the smaller to the larger element, tops point at the header.
  std::vector<std::uint32_t> up_target(len + 1, 0);
  for (const BitonicSubsequence& sub : d.subsequences) {
    const auto& run = sub.elements;
    for (std::size_t j = 0; j + 1 < run.size(); ++j) {
      const std::uint32_t a = run[j];
      const std::uint32_t b = run[j + 1];
      (a < b ? up_target[a] : up_target[b]) = std::max(a, b);
    }
    up_target[sub.top] = header;
  }
  if (redirect_full_tops) {
    for (std::size_t i = 1; i < d.subsequences.size(); ++i) {
      if (d.subsequences[i].kind != BitonicKind::kFull) continue;
      const std::uint32_t top = d.subsequences[i].top;
      const std::uint32_t prev_top = d.subsequences[i - 1].top;
      if (prev_top <= top) {
        throw Error("encode", "redirect target must carry a higher label");
      }
      up_target[top] = prev_top;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(len) + 1);
  for (std::uint32_t v = 1; v <= len; ++v) {
    if (up_target[v] <= v) {
      throw Error("encode", "run decomposition left a node without an upward edge");
    }
    edges.push_back({v, v - 1});
    edges.push_back({v, up_target[v]});
  }
  edges.push_back({header, len});
  return FlowGraph(len + 2, std::move(edges));
}

SelfInvertingPermutation decode_rpg(const FlowGraph& g, bool redirected_tops,
                                    DecodeTrace* trace) {
  if (trace) *trace = DecodeTrace{};
  const std::uint32_t n_nodes = g.node_count();
  if (n_nodes < 3) {
    throw Error("decode", "graph too small to carry a permutation");
  }
  const std::uint32_t len = n_nodes - 2;
  const std::uint32_t header = n_nodes - 1;
  if (g.edge_count() != 2 * static_cast<std::size_t>(len) + 1) {
    throw Error("decode", "edge count does not fit a watermark graph");
  }

  // Split off the chain; flip everything else. Edges into the header name the
  // run tops directly and never enter the flipped edge set.
  std::uint32_t chain_edges = 0;
  std::vector<Edge> flipped;
  flipped.reserve(len);
  std::vector<std::uint32_t> tops_src;
  for (const Edge& e : g.edges()) {
    if (e.to + 1 == e.from) {
      ++chain_edges;
      continue;
    }
    if (e.from >= e.to) {
      throw Error("decode", "stray edge does not point up the chain");
    }
    if (e.from == 0) {
      throw Error("decode", "sink node has an outgoing edge");
    }
    if (e.to == header) {
      tops_src.push_back(e.from);
    } else {
      flipped.push_back({e.to, e.from});
    }
  }
  if (chain_edges != len + 1) {
    throw Error("decode", "node chain is broken");
  }
  if (tops_src.empty()) {
    throw Error("decode", "no edges into the header node");
  }

  std::vector<std::uint8_t> is_top(len + 1, 0);
  for (std::uint32_t t : tops_src) is_top[t] = 1;

  std::vector<std::uint32_t> tops_redirected;
  std::vector<Edge> strand_edges;
  if (redirected_tops) {
    std::vector<std::uint32_t> outdeg(len + 1, 0);
    for (const Edge& e : flipped) ++outdeg[e.from];

    std::vector<std::uint8_t> redirected(len + 1, 0);
    std::vector<Edge> redirect_edges;
    strand_edges.reserve(flipped.size());
    for (const Edge& e : flipped) {
      if (outdeg[e.to] >= 2) {
        if (redirected[e.to]) {
          throw Error("decode", "node is the head of two redirect edges");
        }
        redirected[e.to] = 1;
        redirect_edges.push_back(e);
      } else {
        strand_edges.push_back(e);
      }
    }
    for (const Edge& e : redirect_edges) {
      if (is_top[e.to]) {
        throw Error("decode", "redirected node is already wired to the header");
      }
      tops_redirected.push_back(e.to);
    }
    for (std::uint32_t t : tops_redirected) is_top[t] = 1;
    for (const Edge& e : redirect_edges) {
      if (!is_top[e.from]) {
        throw Error("decode", "redirect edge does not start at a run top");
      }
    }
    std::sort(tops_redirected.begin(), tops_redirected.end());
  } else {
    strand_edges = std::move(flipped);
  }

  // The remaining edges must split into vertex-disjoint simple paths, one per
  // run, with exactly one top on each.
  std::vector<std::uint32_t> deg(len + 1, 0);
  for (const Edge& e : strand_edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  for (std::uint32_t v = 1; v <= len; ++v) {
    if (deg[v] > 2) throw Error("decode", "strand branches");
  }
  std::vector<std::size_t> offset(len + 2, 0);
  for (std::uint32_t v = 1; v <= len; ++v) offset[v + 1] = offset[v] + deg[v];
  std::vector<std::uint32_t> nbr(2 * strand_edges.size());
  {
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (const Edge& e : strand_edges) {
      nbr[cursor[e.from]++] = e.to;
      nbr[cursor[e.to]++] = e.from;
    }
  }

  std::vector<std::uint32_t> comp(len + 1, 0);
  std::vector<std::uint32_t> comp_size{0}, comp_min{0}, comp_max{0};
  std::vector<std::uint32_t> stack;
  for (std::uint32_t v = 1; v <= len; ++v) {
    if (comp[v]) continue;
    const auto id = static_cast<std::uint32_t>(comp_size.size());
    std::uint32_t nodes = 0, degree_sum = 0;
    std::uint32_t lo = v, hi = v;
    comp[v] = id;
    stack.push_back(v);
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      ++nodes;
      degree_sum += deg[u];
      lo = std::min(lo, u);
      hi = std::max(hi, u);
      for (std::size_t i = offset[u]; i < offset[u + 1]; ++i) {
        const std::uint32_t w = nbr[i];
        if (comp[w]) continue;
        comp[w] = id;
        stack.push_back(w);
      }
    }
    if (degree_sum != 2 * (nodes - 1)) {
      throw Error("decode", "strand forms a cycle");
    }
    comp_size.push_back(nodes);
    comp_min.push_back(lo);
    comp_max.push_back(hi);
  }

  const std::size_t k = tops_src.size() + tops_redirected.size();
  if (k < 2) {
    throw Error("decode", "fewer than two runs");
  }
  std::vector<std::uint32_t> tops_desc;
  tops_desc.reserve(k);
  tops_desc.insert(tops_desc.end(), tops_src.begin(), tops_src.end());
  tops_desc.insert(tops_desc.end(), tops_redirected.begin(),
                   tops_redirected.end());
  std::sort(tops_desc.begin(), tops_desc.end(), std::greater<>());

  std::vector<std::uint32_t> comp_top(comp_size.size(), 0);
  for (std::uint32_t t : tops_desc) {
    const std::uint32_t c = comp[t];
    if (comp_top[c]) throw Error("decode", "strand carries two run tops");
    comp_top[c] = t;
  }
  if (comp_size.size() - 1 != k) {
    throw Error("decode", "strand without a run top");
  }

  if (trace) {
    trace->tops_from_source = tops_src;
    trace->tops_redirected = tops_redirected;
    trace->tops_descending = tops_desc;
  }

  std::vector<std::uint32_t> out;
  out.reserve(len);
  std::uint32_t first_slice_max_index = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t top = tops_desc[i];
    const std::uint32_t c = comp[top];
    const bool last = i + 1 == k;

    std::uint32_t start;
    if (!last) {
      start = deg[top] == 2 ? comp_min[c] : comp_max[c];
    } else {
      const std::uint32_t want = first_slice_max_index;
      if (want < 1 || want > len || comp[want] != c) {
        throw Error("decode", "final strand misses the expected start node");
      }
      start = want;
    }
    if (deg[start] > 1) {
      throw Error("decode", "walk start is not a strand endpoint");
    }

    std::vector<std::uint32_t> seq;
    seq.reserve(comp_size[c]);
    std::uint32_t prev = 0, cur = start;
    while (true) {
      seq.push_back(cur);
      std::uint32_t next = 0;
      for (std::size_t t = offset[cur]; t < offset[cur + 1]; ++t) {
        if (nbr[t] != prev) next = nbr[t];
      }
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    if (seq.size() != comp_size[c]) {
      throw Error("decode", "strand walk did not cover its strand");
    }

    if (i == 0 || last) std::reverse(seq.begin(), seq.end());
    if (i == 0) {
      const auto max_it = std::max_element(seq.begin(), seq.end());
      first_slice_max_index =
          static_cast<std::uint32_t>(max_it - seq.begin() + 1);
      if (trace) trace->first_slice_max_index = first_slice_max_index;
    }
    if (trace) {
      trace->slices.push_back(seq);
      trace->walk_starts.push_back(start);
    }
    out.insert(out.end(), seq.begin(), seq.end());
  }

  try {
    return SelfInvertingPermutation(std::move(out));
  } catch (const Error& e) {
    throw Error("decode",
                std::string("recovered sequence is not a self-inverting "
                            "permutation: ") +
                    e.what());
  }
}

}  // namespace detail

FlowGraph encode_f1(const SelfInvertingPermutation& p) {
  const BitonicDecomposition d = decompose_bitonic(p);
  detail::validate_encodable(d, p);
  return detail::build_rpg(d, static_cast<std::uint32_t>(p.length()),
                           /*redirect_full_tops=*/false);
}

SelfInvertingPermutation decode_f1(const FlowGraph& g, DecodeTrace* trace) {
  return detail::decode_rpg(g, /*redirected_tops=*/false, trace);
}

}  // namespace sipmark
