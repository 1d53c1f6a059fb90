#include "acq/report.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "acq/error.hpp"

namespace acq {

namespace {

using Json = nlohmann::ordered_json;

Json distance_json(Distance d) { return d == kInfinity ? Json("inf") : Json(d); }

Json label_set(std::span<const std::string> labels, std::span<const Vertex> vertices) {
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (Vertex v : vertices) names.push_back(labels[v]);
  std::sort(names.begin(), names.end());
  return Json(names);
}

Json label_pairs(std::span<const std::string> labels, std::span<const Edge> edges) {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) {
    std::string a = labels[e.u];
    std::string b = labels[e.v];
    if (b < a) std::swap(a, b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end());
  Json out = Json::array();
  for (auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

Json parts_json(std::span<const std::string> labels,
                const std::optional<std::vector<VertexSet>>& parts) {
  if (!parts) return nullptr;
  std::vector<std::vector<std::string>> named;
  for (const VertexSet& part : *parts) named.push_back(label_set(labels, part));
  std::sort(named.begin(), named.end());
  return Json(named);
}

Json report_json(const TypologyReport& r) {
  const auto& labels = r.labels;
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["diameter"] = distance_json(r.diameter);
  j["radius"] = distance_json(r.radius);
  j["family"] = to_string(r.family);
  j["separable"] = r.separable;
  j["span"] = r.span ? Json(*r.span) : Json(nullptr);
  j["girth"] = distance_json(r.girth);
  j["cell"] = r.cell ? Json::array({r.cell->span, r.cell->girth}) : Json(nullptr);
  j["cliquishness"] = to_string(r.cliquishness);
  j["star_centers"] = label_set(labels, r.witnesses.star_centers);
  j["central_pairs"] = label_pairs(labels, r.witnesses.central_pairs);
  j["cutpoints"] = label_set(labels, r.cutpoints);
  j["singletons"] = label_set(labels, r.witnesses.singletons);
  j["local_cliquelessness"] = r.local_cliquelessness;
  j["moore"] = r.moore;
  j["sst_edges"] = label_pairs(labels, r.sst_edges);
  j["cliqueless_points"] = label_set(labels, r.witnesses.cliqueless_points);
  j["cliqueless_neighborhood_points"] =
      label_set(labels, r.witnesses.cliqueless_neighborhood_points);
  j["multipartite_parts"] = parts_json(labels, r.witnesses.multipartite_parts);
  j["moore_undecided_order"] = r.moore_undecided_order;
  j["alarms"] = r.alarms;
  return j;
}

Json parameter_json(const ParameterValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_id(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_report(const TypologyReport& r) { return report_json(r).dump(); }

std::string emit_span(const Graph& g, const SpanResult& s) {
  Json j;
  j["span"] = s.span;
  j["method"] = to_string(s.method);
  j["witness_tree"] = label_pairs(g.labels(), s.witness_tree.graph().edges());
  return j.dump();
}

std::string emit_girth(const Graph& g, const GirthResult& r) {
  Json j;
  j["girth"] = distance_json(r.girth);
  Json cycle = Json::array();
  for (Vertex v : r.witness_cycle) cycle.push_back(g.label(v));
  j["cycle"] = r.witness_cycle.empty() ? Json(nullptr) : cycle;
  return j.dump();
}

std::string emit_witnesses(const Graph& g, const StructureWitnesses& w,
                           const std::optional<SingletonCheck>& singletons) {
  const auto& labels = g.labels();
  Json j;
  j["star_centers"] = label_set(labels, w.star_centers);
  j["central_pairs"] = label_pairs(labels, w.central_pairs);
  j["singletons"] = label_set(labels, w.singletons);
  j["singletons_attached_to_center"] =
      singletons ? Json(singletons->attached_to_unique_center) : Json(nullptr);
  j["cliqueless_points"] = label_set(labels, w.cliqueless_points);
  j["cliqueless_neighborhood_points"] = label_set(labels, w.cliqueless_neighborhood_points);
  j["multipartite_parts"] = parts_json(labels, w.multipartite_parts);
  j["moore"] = w.moore;
  return j.dump();
}

std::string emit_clubs(const Graph& g, const std::vector<TwoClub>& clubs,
                       const std::vector<TypologyReport>& reports) {
  Json out = Json::array();
  for (std::size_t i = 0; i < clubs.size(); ++i) {
    Json c;
    c["members"] = label_set(g.labels(), clubs[i].members);
    c["size"] = clubs[i].members.size();
    c["induced_diameter"] = clubs[i].induced_diameter;
    c["maximal"] = clubs[i].maximal;
    if (i < reports.size()) c["report"] = report_json(reports[i]);
    out.push_back(std::move(c));
  }
  return out.dump();
}

std::string emit_experiment(const ExperimentResult& r) {
  Json j;
  j["experiment"] = r.name;
  Json params = Json::object();
  for (const auto& [key, value] : r.parameters) params[key] = parameter_json(value);
  j["parameters"] = params;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["favorable"] = r.favorable;
  j["rate"] = r.rate();
  Json counts = Json::object();
  for (const auto& [key, value] : r.counts) counts[key] = value;
  j["counts"] = counts;
  if (!r.witnessed_cells.empty()) j["witnessed_cells"] = r.witnessed_cells;
  return j.dump();
}

std::string emit_experiment_csv(const ExperimentResult& r) {
  std::string header = "experiment";
  std::string row = csv_field(r.name);
  for (const auto& [key, value] : r.parameters) {
    header += "," + csv_field(key);
    const auto* text = std::get_if<std::string>(&value);
    row += "," + csv_field(text ? *text : parameter_json(value).dump());
  }
  header += ",seed,trials,favorable,rate";
  row += "," + std::to_string(r.seed) + "," + std::to_string(r.trials) + "," +
         std::to_string(r.favorable) + "," + Json(r.rate()).dump();
  for (const auto& [key, value] : r.counts) {
    header += "," + csv_field(key);
    row += "," + std::to_string(value);
  }
  return header + "\n" + row + "\n";
}

std::string emit_dot(const Graph& g, std::optional<std::span<const Edge>> highlight) {
  std::set<Edge> bold;
  if (highlight) {
    for (const Edge& e : *highlight) {
      if (e.v >= g.vertex_count() || !g.adjacent(e.u, e.v)) {
        fail(ErrorKind::invalid_argument, "highlighted edge is not in the graph");
      }
      bold.insert(Edge(e.u, e.v));
    }
  }
  std::string out = "graph G {\n";
  for (const std::string& label : g.labels()) out += "  " + dot_id(label) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + dot_id(g.label(e.u)) + " -- " + dot_id(g.label(e.v));
    if (bold.contains(e)) out += " [style=bold]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace acq
