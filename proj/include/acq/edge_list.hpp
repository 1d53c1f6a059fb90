#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

// Edge-list text format, one record per line:
//
//   # comment            ignored, as are blank lines
//   v <label>            declares a (possibly isolated) vertex
//   <label> <label>      declares an edge
//
// Tokens are whitespace-separated. Vertices are numbered by first
// appearance. Repeated edges collapse; self-loops are rejected.
struct EdgeListDocument {
  std::vector<std::string> declared_vertices;
  std::vector<LabelPair> edge_lines;
  std::vector<std::string> vertex_order;  // every label, by first appearance
  std::string source_name;
};

// Throws ParseError with the offending 1-based line number.
EdgeListDocument parse_edge_list_document(std::string_view text, std::string source_name = {});

Graph to_graph(const EdgeListDocument& doc);

Graph parse_edge_list(std::string_view text);

// Reads and parses a file; unreadable files raise ErrorKind::io.
Graph load_edge_list(const std::filesystem::path& path);

// Normal form: a `v` line per vertex in index order, then one line per edge
// in index order. Parsing the result reproduces g exactly.
std::string serialize_edge_list(const Graph& g);

}  // namespace acq
