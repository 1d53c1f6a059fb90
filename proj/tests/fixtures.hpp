#pragma once

// Named graphs and brute-force oracles shared by the test suites. Oracles
// here deliberately avoid the library's own algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "acq/error.hpp"
#include "acq/graph.hpp"
#include "acq/small_graph.hpp"

namespace fx {

using acq::Distance;
using acq::Edge;
using acq::Graph;
using acq::Vertex;

// Vertices labelled "1" .. "n"; edges given 1-based.
inline Graph numbered(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<acq::LabelPair> pairs;
  for (auto [a, b] : edges) pairs.emplace_back(std::to_string(a), std::to_string(b));
  return Graph::build(labels, pairs);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// Center 0 and n - 1 leaves.
inline Graph star(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

// Parts listed by size, consecutive indices.
inline Graph multipartite(std::initializer_list<std::size_t> sizes) {
  std::vector<std::size_t> part;
  for (std::size_t k = 0; auto s : sizes) {
    part.insert(part.end(), s, k++);
  }
  std::vector<Edge> e;
  for (Vertex i = 0; i < part.size(); ++i)
    for (Vertex j = i + 1; j < part.size(); ++j)
      if (part[i] != part[j]) e.emplace_back(i, j);
  return Graph::from_edges(part.size(), e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

// K_6 without the edge (0, 1).
inline Graph k6_minus_edge() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = i + 1; j < 6; ++j)
      if (!(i == 0 && j == 1)) e.emplace_back(i, j);
  return Graph::from_edges(6, e);
}

// Pentagon 1..5 with 6 joined to 1 and 3.
inline Graph h6() { return numbered(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 1}, {6, 3}}); }

// Pentagon 1..5, 6 ~ {1,3}, 7 ~ {2,3,4}: triangles {2,3,7} and {3,4,7}.
inline Graph h7() {
  return numbered(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 1}, {6, 3}, {7, 2}, {7, 3}, {7, 4}});
}

// Pentagon 1..5, 6 ~ {1,3}, 7 ~ {2,3}: the single triangle {2,3,7}.
inline Graph h7_one_triangle() {
  return numbered(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 1}, {6, 3}, {7, 2}, {7, 3}});
}

inline std::vector<Vertex> ids(const Graph& g, std::initializer_list<const char*> labels) {
  std::vector<Vertex> out;
  for (const char* l : labels) out.push_back(g.index_of(l));
  std::sort(out.begin(), out.end());
  return out;
}

// Kind of the acq::Error thrown by f, or nothing when f returns normally.
template <class F>
std::optional<acq::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const acq::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// ---- oracles -------------------------------------------------------------

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<Distance>> floyd(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr Distance inf = acq::kInfinity;
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j])
          d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Distance floyd_diameter(const Graph& g) {
  Distance best = 0;
  for (const auto& row : floyd(g))
    for (Distance x : row) best = std::max(best, x);
  return best;
}

// Length of a shortest cycle by depth-first enumeration of simple cycles
// whose smallest vertex is the start; kInfinity when acyclic.
inline Distance girth_by_cycles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Distance best = acq::kInfinity;
  std::vector<char> on(n, 0);
  std::function<void(Vertex, Vertex, Distance)> walk = [&](Vertex start, Vertex at, Distance len) {
    if (len + 1 >= best) return;
    for (Vertex w : g.neighbors(at)) {
      if (w == start && len >= 2) {
        best = std::min(best, len + 1);
        continue;
      }
      if (w <= start || on[w]) continue;
      on[w] = 1;
      walk(start, w, len + 1);
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    walk(s, s, 0);
    on[s] = 0;
  }
  return best;
}

// Bitmask helpers for hosts of at most 20 vertices.
inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  return adj;
}

inline bool mask_is_two_club(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  if (s == 0) return false;
  for (std::uint32_t a = s; a != 0; a &= a - 1) {
    const int u = std::countr_zero(a);
    std::uint32_t reach = (1U << u) | (adj[u] & s);
    for (std::uint32_t b = adj[u] & s; b != 0; b &= b - 1) reach |= adj[std::countr_zero(b)] & s;
    if ((s & ~reach) != 0) return false;
  }
  return true;
}

// Maximal 2-clubs over all 2^n subsets: 2-clubs with no 2-club strictly
// containing them. Sorted by size descending, then members.
inline std::vector<std::vector<Vertex>> brute_force_clubs(const Graph& g, std::size_t min_size) {
  const std::size_t n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (1U << n) - 1;
  std::vector<char> club(full + 1, 0), within(full + 1, 0);  // within: some superset is a club
  for (std::uint32_t s = 1; s <= full; ++s) club[s] = mask_is_two_club(adj, s);
  for (std::uint32_t s = full + 1; s-- > 0;) {
    within[s] = club[s];
    for (std::size_t v = 0; v < n && !within[s]; ++v)
      if (!(s >> v & 1U) && within[s | (1U << v)]) within[s] = 1;
  }
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (!club[s] || static_cast<std::size_t>(std::popcount(s)) < min_size) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1U) && within[s | (1U << v)]) maximal = false;
    if (!maximal) continue;
    std::vector<Vertex> m;
    for (std::uint32_t a = s; a != 0; a &= a - 1) m.push_back(static_cast<Vertex>(std::countr_zero(a)));
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return out;
}

// Every connected graph on n <= 8 vertices up to isomorphism.
inline std::vector<acq::SmallGraph> connected_corpus(std::size_t n) {
  std::vector<acq::SmallGraph> out;
  for (const auto& g : acq::unlabeled_graphs(n))
    if (g.diameter() != acq::kInfinity) out.push_back(g);
  return out;
}

}  // namespace fx
