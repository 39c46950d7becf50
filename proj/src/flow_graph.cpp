#include "sipmark/flow_graph.hpp"

#include <algorithm>
#include <numeric>

namespace sipmark {

namespace {

struct Csr {
  std::vector<std::size_t> offset;
  std::vector<std::uint32_t> target;
};

Csr build_csr(std::uint32_t n, const std::vector<Edge>& edges, bool forward) {
  Csr csr;
  csr.offset.assign(n + 1, 0);
  for (const Edge& e : edges) ++csr.offset[(forward ? e.from : e.to) + 1];
  for (std::uint32_t v = 0; v < n; ++v) csr.offset[v + 1] += csr.offset[v];
  csr.target.resize(edges.size());
  std::vector<std::size_t> cursor(csr.offset.begin(), csr.offset.end() - 1);
  for (const Edge& e : edges) {
    const std::uint32_t key = forward ? e.from : e.to;
    csr.target[cursor[key]++] = forward ? e.to : e.from;
  }
  return csr;
}

}  // namespace

FlowGraph::FlowGraph(std::uint32_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.from >= node_count_ || e.to >= node_count_) {
      throw Error("graph", "edge endpoint out of range");
    }
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) {
    std::sort(edges_.begin(), edges_.end());
  }
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error("graph", "duplicate edge");
  }
}

bool FlowGraph::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool FlowGraph::add_edge(Edge e) {
  if (e.from >= node_count_ || e.to >= node_count_) {
    throw Error("graph", "edge endpoint out of range");
  }
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool FlowGraph::remove_edge(Edge e) {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return false;
  edges_.erase(it);
  return true;
}

std::uint32_t FlowGraph::out_degree(std::uint32_t node) const {
  const auto lo = std::lower_bound(edges_.begin(), edges_.end(), Edge{node, 0});
  auto hi = lo;
  while (hi != edges_.end() && hi->from == node) ++hi;
  return static_cast<std::uint32_t>(hi - lo);
}

std::uint32_t FlowGraph::in_degree(std::uint32_t node) const {
  std::uint32_t count = 0;
  for (const Edge& e : edges_) count += e.to == node;
  return count;
}

std::optional<std::uint32_t> FlowGraph::unique_sink() const {
  std::vector<std::uint8_t> has_out(node_count_, 0);
  for (const Edge& e : edges_) has_out[e.from] = 1;
  std::optional<std::uint32_t> sink;
  for (std::uint32_t v = 0; v < node_count_; ++v) {
    if (has_out[v]) continue;
    if (sink) return std::nullopt;
    sink = v;
  }
  return sink;
}

HamiltonianPath find_hamiltonian_path(const FlowGraph& g) {
  const std::uint32_t n = g.node_count();
  if (n == 0) throw Error("graph", "empty graph");

  const std::optional<std::uint32_t> sink = g.unique_sink();
  if (!sink) {
    throw Error("graph", "expected exactly one node without outgoing edges");
  }

  const Csr preds = build_csr(n, g.edges(), /*forward=*/false);
  std::vector<std::uint8_t> placed(n, 0);
  std::vector<std::uint32_t> reverse_path;
  reverse_path.reserve(n);

  std::uint32_t current = *sink;
  placed[current] = 1;
  reverse_path.push_back(current);
  for (std::uint32_t step = 1; step < n; ++step) {
    std::uint32_t next = 0;
    std::uint32_t candidates = 0;
    for (std::size_t i = preds.offset[current]; i < preds.offset[current + 1];
         ++i) {
      const std::uint32_t p = preds.target[i];
      if (placed[p]) continue;
      ++candidates;
      next = p;
    }
    if (candidates != 1) {
      throw Error("graph", candidates == 0
                               ? "no unique Hamiltonian path: chain breaks"
                               : "no unique Hamiltonian path: choice point");
    }
    placed[next] = 1;
    reverse_path.push_back(next);
    current = next;
  }

  HamiltonianPath h;
  h.nodes.assign(reverse_path.rbegin(), reverse_path.rend());
  return h;
}

FlowGraph relabel_from_path(const FlowGraph& g, const HamiltonianPath& h) {
  const std::uint32_t n = g.node_count();
  if (h.nodes.size() != n) {
    throw Error("graph", "path does not cover every node exactly once");
  }
  std::vector<std::uint32_t> mapping(n, n);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const std::uint32_t v = h.nodes[i];
    if (v >= n || mapping[v] != n) {
      throw Error("graph", "path does not cover every node exactly once");
    }
    mapping[v] = static_cast<std::uint32_t>(n - 1 - i);
  }
  for (std::size_t i = 0; i + 1 < h.nodes.size(); ++i) {
    if (!g.has_edge({h.nodes[i], h.nodes[i + 1]})) {
      throw Error("graph", "path step is not an edge of the graph");
    }
  }
  return apply_node_permutation(g, mapping);
}

FlowGraph canonicalize(const FlowGraph& g) {
  return relabel_from_path(g, find_hamiltonian_path(g));
}

FlowGraph apply_node_permutation(const FlowGraph& g,
                                 const std::vector<std::uint32_t>& mapping) {
  const std::uint32_t n = g.node_count();
  if (mapping.size() != n) {
    throw Error("graph", "node mapping has the wrong size");
  }
  std::vector<std::uint8_t> hit(n, 0);
  for (std::uint32_t v : mapping) {
    if (v >= n || hit[v]) throw Error("graph", "node mapping is not a bijection");
    hit[v] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back({mapping[e.from], mapping[e.to]});
  }
  return FlowGraph(n, std::move(edges));
}

bool check_reducible(const FlowGraph& g, std::uint32_t source) {
  const std::uint32_t n = g.node_count();
  if (n == 0) throw Error("graph", "empty graph");
  if (source >= n) throw Error("graph", "source out of range");

  {
    const Csr succ = build_csr(n, g.edges(), /*forward=*/true);
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> stack{source};
    seen[source] = 1;
    std::uint32_t reached = 1;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::size_t i = succ.offset[v]; i < succ.offset[v + 1]; ++i) {
        const std::uint32_t w = succ.target[i];
        if (seen[w]) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached != n) {
      throw Error("graph", "node unreachable from source: not a flow-graph");
    }
  }
  if (n == 1) return true;

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  // Self-loops are dropped on entry and whenever a merge would create one.
  std::vector<std::vector<std::uint32_t>> preds(n), succs(n);
  for (const Edge& e : g.edges()) {
    if (e.from == e.to) continue;
    preds[e.to].push_back(e.from);
    succs[e.from].push_back(e.to);
  }

  std::vector<std::uint8_t> queued(n, 1);
  std::vector<std::uint32_t> work(n);
  std::iota(work.begin(), work.end(), 0);
  std::uint32_t alive = n;

  while (!work.empty()) {
    const std::uint32_t v = work.back();
    work.pop_back();
    queued[v] = 0;
    if (find(v) != v || v == find(source)) continue;

    // Count distinct external predecessor clusters, stopping at two.
    std::uint32_t unique_pred = n;
    bool multiple = false;
    for (std::uint32_t p : preds[v]) {
      const std::uint32_t rp = find(p);
      if (rp == v) continue;
      if (unique_pred == n) {
        unique_pred = rp;
      } else if (rp != unique_pred) {
        multiple = true;
        break;
      }
    }
    if (multiple || unique_pred == n) continue;

    // Absorb v into its unique predecessor.
    parent[v] = unique_pred;
    if (--alive == 1) return true;
    for (std::uint32_t w : succs[v]) {
      const std::uint32_t rw = find(w);
      if (rw == v || rw == unique_pred) continue;
      succs[unique_pred].push_back(rw);
      if (!queued[rw]) {
        queued[rw] = 1;
        work.push_back(rw);
      }
    }
    preds[v].clear();
    preds[v].shrink_to_fit();
    succs[v].clear();
    succs[v].shrink_to_fit();
    if (!queued[unique_pred]) {
      queued[unique_pred] = 1;
      work.push_back(unique_pred);
    }
  }
  return alive == 1;
}

bool check_reducible(const FlowGraph& g) {
  if (g.node_count() == 0) throw Error("graph", "empty graph");
  return check_reducible(g, g.node_count() - 1);
}

}  // namespace sipmark
