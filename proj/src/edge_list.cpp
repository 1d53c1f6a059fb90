#include "acq/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "acq/error.hpp"

namespace acq {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  constexpr std::string_view kSpace = " \t\r\f\v";
  std::vector<std::string_view> tokens;
  std::size_t pos = line.find_first_not_of(kSpace);
  while (pos != std::string_view::npos) {
    const std::size_t end = line.find_first_of(kSpace, pos);
    tokens.push_back(line.substr(pos, end == std::string_view::npos ? end : end - pos));
    pos = end == std::string_view::npos ? end : line.find_first_not_of(kSpace, end);
  }
  return tokens;
}

}  // namespace

EdgeListDocument parse_edge_list_document(std::string_view text, std::string source_name) {
  EdgeListDocument doc;
  doc.source_name = std::move(source_name);
  std::unordered_set<std::string> known;
  auto note = [&](std::string_view label) {
    if (known.emplace(label).second) doc.vertex_order.emplace_back(label);
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "malformed line, expected '<label> <label>' or 'v <label>'");
    }
    if (tokens[0] == "v") {
      doc.declared_vertices.emplace_back(tokens[1]);
      note(tokens[1]);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop at '" + std::string(tokens[0]) + "'");
    }
    doc.edge_lines.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
    note(tokens[0]);
    note(tokens[1]);
  }
  if (doc.vertex_order.empty()) throw ParseError(0, "empty document");
  return doc;
}

Graph to_graph(const EdgeListDocument& doc) {
  return Graph::build(doc.vertex_order, doc.edge_lines);
}

Graph parse_edge_list(std::string_view text) { return to_graph(parse_edge_list_document(text)); }

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return to_graph(parse_edge_list_document(buffer.str(), path.string()));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (const std::string& label : g.labels()) out += "v " + label + "\n";
  for (const Edge& e : g.edges()) out += g.label(e.u) + " " + g.label(e.v) + "\n";
  return out;
}

}  // namespace acq
