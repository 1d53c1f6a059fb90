#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace acq {

using Vertex = std::uint32_t;

// Sorted ascending, duplicate-free vertex indices.
using VertexSet = std::vector<Vertex>;

// Path length; kInfinity marks vertices in different components.
using Distance = std::uint32_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using LabelPair = std::pair<std::string, std::string>;

// Immutable simple undirected graph. Vertices carry opaque string labels and
// are addressed internally by dense indices in label insertion order.
class Graph {
 public:
  Graph() = default;

  // Fails on duplicate labels, unknown endpoints and self-loops. Repeated
  // edges (in either orientation) collapse.
  static Graph build(std::vector<std::string> labels, std::span<const LabelPair> edges);

  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  // Labels are the decimal indices "0" .. "n-1".
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex index_of(std::string_view label) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  // Every edge once, in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  // Throws ErrorKind::invalid_argument for an index outside [0, n).
  void require_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void init(std::vector<std::string> labels, std::vector<Edge> edges);

  static constexpr std::size_t kDenseLimit = 8192;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;

  // Constant-time pair membership: a bit matrix for small graphs, a hashed
  // set of packed pairs above kDenseLimit.
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> matrix_;
  std::unordered_set<std::uint64_t> pair_set_;
};

struct MetricProfile {
  std::vector<Distance> eccentricity;
  Distance radius = 0;
  Distance diameter = 0;
  VertexSet radial_center;
};

// Partition of V \ {u, v} by adjacency to u and v.
struct NeighborPartition {
  VertexSet common;    // adjacent to both
  VertexSet only_u;    // adjacent to u, not v
  VertexSet only_v;    // adjacent to v, not u
  VertexSet neither;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

Graph complement(const Graph& g);

// Single-source breadth-first distances; unreachable vertices get kInfinity.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

Distance distance(const Graph& g, Vertex u, Vertex v);

// All-pairs breadth-first eccentricities. A disconnected graph has infinite
// radius and diameter; the empty graph has radius = diameter = 0.
MetricProfile metric_profile(const Graph& g);

// Vertices at distance exactly i >= 1 from u.
VertexSet neighborhood(const Graph& g, Vertex u, Distance i);

NeighborPartition neighbor_partition(const Graph& g, Vertex u, Vertex v);

// Components ordered by smallest member; members sorted.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Articulation points of a connected graph.
VertexSet cutpoints(const Graph& g);

// Point subgraph on s (duplicates ignored). Labels are carried over and
// vertices keep their relative order from g.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

DegreeProfile degree_profile(const Graph& g);

}  // namespace acq
