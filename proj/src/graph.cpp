#include "acq/graph.hpp"

#include <algorithm>

#include "acq/error.hpp"

namespace acq {

namespace {

std::uint64_t pack(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph Graph::build(std::vector<std::string> labels, std::span<const LabelPair> edges) {
  std::unordered_map<std::string, Vertex> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<Vertex>(i)).second) {
      fail(ErrorKind::invalid_argument, "duplicate label '" + labels[i] + "'");
    }
  }
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(ErrorKind::invalid_argument, "unknown endpoint '" + a + "'");
    if (ib == index.end()) fail(ErrorKind::invalid_argument, "unknown endpoint '" + b + "'");
    if (ia->second == ib->second) fail(ErrorKind::invalid_argument, "self-loop at '" + a + "'");
    resolved.emplace_back(ia->second, ib->second);
  }
  Graph g;
  g.init(std::move(labels), std::move(resolved));
  return g;
}

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  std::vector<LabelPair> named;
  named.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.v >= labels.size()) {
      fail(ErrorKind::invalid_argument, "unknown endpoint " + std::to_string(e.v));
    }
    named.emplace_back(labels[e.u], labels[e.v]);
  }
  return build(std::move(labels), named);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return from_edges(std::move(labels), edges);
}

void Graph::init(std::vector<std::string> labels, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::size_t n = labels.size();
  labels_ = std::move(labels);
  index_.clear();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(labels_[i], static_cast<Vertex>(i));

  adjacency_.assign(n, {});
  for (const Edge& e : edges) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  edge_count_ = edges.size();

  if (n <= kDenseLimit) {
    words_per_row_ = (n + 63) / 64;
    matrix_.assign(n * words_per_row_, 0);
    for (const Edge& e : edges) {
      matrix_[e.u * words_per_row_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      matrix_[e.v * words_per_row_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  } else {
    pair_set_.reserve(edges.size());
    for (const Edge& e : edges) pair_set_.insert(pack(e.u, e.v));
  }
}

const std::string& Graph::label(Vertex v) const {
  require_vertex(v);
  return labels_[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) fail(ErrorKind::invalid_argument, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  require_vertex(a);
  require_vertex(b);
  if (vertex_count() <= kDenseLimit) {
    return (matrix_[a * words_per_row_ + b / 64] >> (b % 64)) & 1U;
  }
  return a != b && pair_set_.contains(pack(a, b));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::require_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(v));
  }
}

Graph complement(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.labels(), edges);
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.require_vertex(source);
  std::vector<Distance> dist(g.vertex_count(), kInfinity);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(v);
  return bfs_distances(g, u)[v];
}

MetricProfile metric_profile(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  MetricProfile p;
  p.eccentricity.assign(n, 0);
  if (n == 0) return p;
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    p.eccentricity[u] = *std::max_element(dist.begin(), dist.end());
  }
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  for (Vertex u = 0; u < n; ++u) {
    if (p.eccentricity[u] == p.radius) p.radial_center.push_back(u);
  }
  return p;
}

VertexSet neighborhood(const Graph& g, Vertex u, Distance i) {
  if (i < 1) fail(ErrorKind::invalid_argument, "neighborhood order must be >= 1");
  const auto dist = bfs_distances(g, u);
  VertexSet out;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] == i) out.push_back(v);
  }
  return out;
}

NeighborPartition neighbor_partition(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) fail(ErrorKind::invalid_argument, "neighbor partition needs two distinct vertices");
  NeighborPartition p;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    const bool to_u = g.adjacent(w, u);
    const bool to_v = g.adjacent(w, v);
    if (to_u && to_v) {
      p.common.push_back(w);
    } else if (to_u) {
      p.only_u.push_back(w);
    } else if (to_v) {
      p.only_v.push_back(w);
    } else {
      p.neither.push_back(w);
    }
  }
  return p;
}

std::vector<VertexSet> components(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet cutpoints(const Graph& g) {
  if (!is_connected(g)) fail(ErrorKind::precondition, "graph is disconnected");
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (n == 0) return {};

  // Iterative Hopcroft-Tarjan low-link from root 0.
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<std::size_t> order(n, 0), low(n, 0), next_edge(n, 0);
  std::vector<Vertex> parent(n, kNone);
  std::vector<bool> visited(n, false), is_cut(n, false);
  std::size_t clock = 0;
  std::size_t root_children = 0;

  std::vector<Vertex> stack{0};
  visited[0] = true;
  order[0] = low[0] = clock++;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next_edge[u] < nbrs.size()) {
      const Vertex w = nbrs[next_edge[u]++];
      if (!visited[w]) {
        visited[w] = true;
        parent[w] = u;
        order[w] = low[w] = clock++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], order[w]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[u];
    if (p != kNone) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= order[p]) is_cut[p] = true;
    }
  }
  if (root_children > 1) is_cut[0] = true;

  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) g.require_vertex(v);

  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (Vertex v : members) labels.push_back(g.label(v));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) p.degrees.push_back(g.degree(v));
  if (!p.degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

}  // namespace acq
