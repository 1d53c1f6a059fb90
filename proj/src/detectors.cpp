#include "acq/detectors.hpp"

#include <algorithm>
#include <functional>

#include "acq/error.hpp"
#include "acq/span_girth.hpp"

namespace acq {

namespace {

bool on_triangle(const Graph& g, Vertex u) {
  const auto nbrs = g.neighbors(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.adjacent(nbrs[i], nbrs[j])) return true;
    }
  }
  return false;
}

// Some simple 5-cycle u - a - b - c - v - u through the edge (u, v).
bool edge_on_pentagon(const Graph& g, Vertex u, Vertex v) {
  for (Vertex a : g.neighbors(u)) {
    if (a == v) continue;
    for (Vertex c : g.neighbors(v)) {
      if (c == u || c == a) continue;
      for (Vertex b : g.neighbors(a)) {
        if (b != u && b != v && b != c && g.adjacent(b, c)) return true;
      }
    }
  }
  return false;
}

// Calls visit(cycle) once per simple cycle of the given length; the cycle
// starts at its smallest vertex and its second vertex is below its last.
void for_each_cycle(const Graph& g, std::size_t length,
                    const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  bool stop = false;
  std::function<void()> extend = [&] {
    if (stop) return;
    const Vertex start = path.front();
    const Vertex last = path.back();
    if (path.size() == length) {
      if (g.adjacent(last, start) && path[1] < last) stop = !visit(path);
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = false;
      if (stop) return;
    }
  };
  for (Vertex s = 0; s < g.vertex_count() && !stop; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend();
    on_path[s] = false;
  }
}

std::vector<Vertex> find_chord(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(cycle[i], cycle[j])) return {cycle[i], cycle[j]};
    }
  }
  return {};
}

}  // namespace

VertexSet spanning_star_centers(const Graph& g) {
  VertexSet out;
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 == n) out.push_back(v);
  }
  return out;
}

std::vector<Edge> central_neighbor_pairs(const Graph& g) {
  if (!is_connected(g)) fail(ErrorKind::precondition, "graph is disconnected");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (neighbor_partition(g, e.u, e.v).neither.empty()) out.push_back(e);
  }
  return out;
}

SingletonCheck singleton_check(const Graph& g) {
  if (g.vertex_count() == 0 || metric_profile(g).diameter != 2) {
    fail(ErrorKind::precondition, "diameter != 2");
  }
  SingletonCheck check;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) check.singletons.push_back(v);
  }
  if (!check.singletons.empty()) {
    const VertexSet centers = spanning_star_centers(g);
    check.attached_to_unique_center =
        centers.size() == 1 && std::all_of(check.singletons.begin(), check.singletons.end(),
                                           [&](Vertex s) { return g.adjacent(s, centers[0]); });
  }
  return check;
}

VertexSet cliqueless_points(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!on_triangle(g, v)) out.push_back(v);
  }
  return out;
}

VertexSet cliqueless_neighborhood_points(const Graph& g) {
  std::vector<bool> cliqueless(g.vertex_count(), false);
  for (Vertex v : cliqueless_points(g)) cliqueless[v] = true;
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    if (std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return cliqueless[w]; })) {
      out.push_back(v);
    }
  }
  return out;
}

std::optional<std::vector<VertexSet>> complete_multipartite(const Graph& g) {
  // Within a complement component, "complete there" means independent in g.
  std::vector<VertexSet> parts = components(complement(g));
  for (const VertexSet& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (g.adjacent(part[i], part[j])) return std::nullopt;
      }
    }
  }
  return parts;
}

bool is_moore_order(std::size_t n) noexcept {
  return n == 5 || n == 10 || n == 50 || n == kUndecidedMooreOrder;
}

bool moore_check(const Graph& g) {
  if (!is_moore_order(g.vertex_count())) return false;
  const DegreeProfile degrees = degree_profile(g);
  if (degrees.min_degree != degrees.max_degree) return false;
  return metric_profile(g).diameter == 2 && girth(g).girth == 5;
}

bool CliquelessHamletChecklist::all_passed() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const PropertyCheck& c) { return c.passed; });
}

CliquelessHamletChecklist cliqueless_hamlet_properties(const Graph& g, std::size_t cycle_cap) {
  if (g.vertex_count() > cycle_cap) {
    fail(ErrorKind::capacity, "cycle enumeration limited to " + std::to_string(cycle_cap) +
                                  " vertices, got " + std::to_string(g.vertex_count()));
  }
  const SpanResult span = span_2club(g);
  if (span.span != 4 || girth(g).girth != 4) {
    fail(ErrorKind::precondition, "not a cliqueless hamlet (span 4, girth 4)");
  }

  CliquelessHamletChecklist list;
  auto& [a, b, c, d, e, f] = list.items;
  a = {'a', "both private neighbourhoods of every edge are non-empty", true, {}};
  b = {'b', "no edge has a common neighbour", true, {}};
  c = {'c', "every edge leaves some vertex undominated", true, {}};
  d = {'d', "every edge lies on a 5-cycle", true, {}};
  e = {'e', "every 4-cycle and 5-cycle is chordless", true, {}};
  f = {'f', "every neighbourhood is independent", true, {}};

  auto flag = [](PropertyCheck& item, std::vector<Vertex> witness) {
    if (item.passed) {
      item.passed = false;
      item.counterexample = std::move(witness);
    }
  };

  for (const Edge& edge : g.edges()) {
    const NeighborPartition p = neighbor_partition(g, edge.u, edge.v);
    if (p.only_u.empty() || p.only_v.empty()) flag(a, {edge.u, edge.v});
    if (!p.common.empty()) flag(b, {edge.u, edge.v});
    if (p.neither.empty()) flag(c, {edge.u, edge.v});
    if (!edge_on_pentagon(g, edge.u, edge.v)) flag(d, {edge.u, edge.v});
  }
  for (std::size_t length : {4U, 5U}) {
    for_each_cycle(g, length, [&](const std::vector<Vertex>& cycle) {
      if (!find_chord(g, cycle).empty()) {
        flag(e, cycle);
        return false;
      }
      return true;
    });
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (on_triangle(g, v)) {
      flag(f, {v});
      break;
    }
  }
  return list;
}

StructureWitnesses detect_structures(const Graph& g) {
  StructureWitnesses w;
  w.star_centers = spanning_star_centers(g);
  if (g.vertex_count() > 0 && is_connected(g)) w.central_pairs = central_neighbor_pairs(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) w.singletons.push_back(v);
  }
  w.cliqueless_points = cliqueless_points(g);
  w.cliqueless_neighborhood_points = cliqueless_neighborhood_points(g);
  w.multipartite_parts = complete_multipartite(g);
  w.moore = moore_check(g);
  return w;
}

}  // namespace acq
