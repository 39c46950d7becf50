#include "sipmark/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace sipmark {

namespace {

constexpr std::string_view kMagic = "SIPMARK-RPG v1";

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error("parse", "line " + std::to_string(line_no) + ": " + what);
}

struct LineReader {
  std::string_view rest;
  std::size_t line_no = 0;

  std::optional<std::string_view> next() {
    if (rest.empty()) return std::nullopt;
    ++line_no;
    const std::size_t pos = rest.find('\n');
    if (pos == std::string_view::npos) {
      // Final line without a terminator still counts.
      std::string_view line = rest;
      rest = {};
      return line;
    }
    std::string_view line = rest.substr(0, pos);
    rest.remove_prefix(pos + 1);
    return line;
  }
};

std::uint32_t parse_u32(std::string_view token, std::size_t line_no,
                        const char* what) {
  std::uint32_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    parse_fail(line_no, std::string("malformed ") + what);
  }
  return value;
}

std::uint32_t parse_counted_line(LineReader& reader, std::string_view keyword) {
  const auto line = reader.next();
  if (!line) parse_fail(reader.line_no + 1, "unexpected end of file");
  const std::size_t space = line->find(' ');
  if (space == std::string_view::npos || line->substr(0, space) != keyword) {
    parse_fail(reader.line_no, "expected \"" + std::string(keyword) + " <count>\"");
  }
  return parse_u32(line->substr(space + 1), reader.line_no, "count");
}

}  // namespace

std::string serialize(const FlowGraph& g) {
  std::string out;
  out.reserve(32 + g.edge_count() * 12);
  out.append(kMagic);
  out.push_back('\n');
  out.append("nodes ");
  out.append(std::to_string(g.node_count()));
  out.push_back('\n');
  out.append("edges ");
  out.append(std::to_string(g.edge_count()));
  out.push_back('\n');
  for (const Edge& e : g.edges()) {
    out.append(std::to_string(e.from));
    out.push_back(' ');
    out.append(std::to_string(e.to));
    out.push_back('\n');
  }
  return out;
}

FlowGraph deserialize(std::string_view text) {
  LineReader reader{text};

  const auto header = reader.next();
  if (!header || *header != kMagic) {
    parse_fail(1, "bad header, expected \"" + std::string(kMagic) + "\"");
  }
  const std::uint32_t node_count = parse_counted_line(reader, "nodes");
  const std::uint32_t edge_count = parse_counted_line(reader, "edges");

  std::vector<Edge> edges;
  edges.reserve(edge_count);
  std::set<Edge> seen;
  for (std::uint32_t i = 0; i < edge_count; ++i) {
    const auto line = reader.next();
    if (!line) parse_fail(reader.line_no + 1, "unexpected end of file");
    const std::size_t space = line->find(' ');
    if (space == std::string_view::npos ||
        line->find(' ', space + 1) != std::string_view::npos) {
      parse_fail(reader.line_no, "expected \"<from> <to>\"");
    }
    Edge e;
    e.from = parse_u32(line->substr(0, space), reader.line_no, "node id");
    e.to = parse_u32(line->substr(space + 1), reader.line_no, "node id");
    if (e.from >= node_count || e.to >= node_count) {
      parse_fail(reader.line_no, "node id out of range");
    }
    if (!seen.insert(e).second) {
      parse_fail(reader.line_no, "duplicate edge " + std::to_string(e.from) +
                                     " " + std::to_string(e.to));
    }
    edges.push_back(e);
  }
  if (const auto extra = reader.next()) {
    parse_fail(reader.line_no, "trailing content");
  }
  return FlowGraph(node_count, std::move(edges));
}

FlowGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("io", "cannot read " + path);
  return deserialize(buffer.str());
}

void write_graph_file(const FlowGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io", "cannot open " + path + " for writing");
  const std::string text = serialize(g);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error("io", "cannot write " + path);
}

std::string export_dot(const FlowGraph& g) {
  bool canonical = true;
  FlowGraph drawn = g;
  try {
    drawn = canonicalize(g);
  } catch (const Error&) {
    canonical = false;
  }

  std::string out = "digraph sipmark_rpg {\n";
  for (std::uint32_t v = 0; v < drawn.node_count(); ++v) {
    out.append("  u");
    out.append(std::to_string(v));
    out.append(";\n");
  }
  for (const Edge& e : drawn.edges()) {
    out.append("  u");
    out.append(std::to_string(e.from));
    out.append(" -> u");
    out.append(std::to_string(e.to));
    const bool chain = canonical && e.to + 1 == e.from;
    if (canonical && !chain) out.append(" [style=dashed]");
    out.append(";\n");
  }
  out.append("}\n");
  return out;
}

}  // namespace sipmark
