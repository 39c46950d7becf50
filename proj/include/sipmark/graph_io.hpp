#pragma once

#include <string>
#include <string_view>

#include "sipmark/flow_graph.hpp"

namespace sipmark {

// Text format, UTF-8 with LF line endings:
//
//   SIPMARK-RPG v1
//   nodes <N>
//   edges <M>
//   <from> <to>          (M lines, ascending (from, to) order)
//
// serialize/deserialize round-trip bit-exactly. The reader accepts edges in
// any order and node ids in any role arrangement, as long as ids stay within
// 0..N-1 and no edge repeats; violations raise a parse error carrying the
// offending line number.
std::string serialize(const FlowGraph& g);
FlowGraph deserialize(std::string_view text);

FlowGraph read_graph_file(const std::string& path);
void write_graph_file(const FlowGraph& g, const std::string& path);

// Deterministic Graphviz text. Nodes are renamed along the Hamiltonian path
// first (u0 is the sink) and chain edges are drawn solid while the encoded
// back edges are dashed; if no unique path exists, ids are kept and all edges
// are drawn solid.
std::string export_dot(const FlowGraph& g);

}  // namespace sipmark
