#include "acq/span_girth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>

#include "acq/error.hpp"

namespace acq {

namespace {

Tree tree_from_edges(const Graph& g, const std::vector<Edge>& edges) {
  return require_tree(Graph::from_edges(g.labels(), edges));
}

std::optional<Edge> first_dominating_pair(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (const Edge& e : g.edges()) {
    bool covers = true;
    for (Vertex w = 0; w < n && covers; ++w) {
      if (w == e.u || w == e.v) continue;
      covers = g.adjacent(w, e.u) || g.adjacent(w, e.v);
    }
    if (covers) return e;
  }
  return std::nullopt;
}

// Exhaustive spanning-tree search on graphs of at most 64 vertices. Forest
// components are tracked with bitmasks; a branch is cut as soon as a merged
// component is already as wide as the best complete tree, since joining
// more edges never shrinks a component's diameter.
class SpanningTreeSearch {
 public:
  explicit SpanningTreeSearch(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {
    adjacency_.assign(n_, 0);
    component_.resize(n_);
    std::iota(component_.begin(), component_.end(), Vertex{0});
    width_.assign(n_, 0);
    best_ = static_cast<Distance>(n_);
    floor_ = n_ >= 3 ? 2 : static_cast<Distance>(n_ - 1);
  }

  Distance run() {
    if (n_ == 1) {
      best_ = 0;
      return best_;
    }
    descend(0, 0);
    return best_;
  }

  const std::vector<Edge>& best_edges() const { return best_edges_; }

 private:
  // Eccentricity of `source` within its forest component.
  Distance eccentricity(Vertex source) const {
    std::uint64_t seen = std::uint64_t{1} << source;
    std::uint64_t frontier = seen;
    Distance depth = 0;
    while (true) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= adjacency_[std::countr_zero(f)];
      }
      next &= ~seen;
      if (next == 0) return depth;
      seen |= next;
      frontier = next;
      ++depth;
    }
  }

  // True when the chosen edges plus edges_[from..] still connect the graph.
  bool can_still_span(std::size_t from) const {
    std::vector<Vertex> root(component_);
    auto find = [&root](Vertex x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::size_t parts = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (component_[v] == v) ++parts;
    }
    for (std::size_t i = from; i < edges_.size() && parts > 1; ++i) {
      const Vertex a = find(component_[edges_[i].u]);
      const Vertex b = find(component_[edges_[i].v]);
      if (a != b) {
        root[a] = b;
        --parts;
      }
    }
    return parts == 1;
  }

  void descend(std::size_t index, std::size_t chosen) {
    if (best_ == floor_) return;
    if (chosen == n_ - 1) {
      const Distance d = width_[component_[0]];
      if (d < best_) {
        best_ = d;
        best_edges_ = current_;
      }
      return;
    }
    if (edges_.size() - index < n_ - 1 - chosen) return;

    const Edge e = edges_[index];
    const Vertex ca = component_[e.u];
    const Vertex cb = component_[e.v];
    if (ca != cb) {
      const Distance merged =
          std::max({width_[ca], width_[cb], eccentricity(e.u) + 1 + eccentricity(e.v)});
      if (merged < best_) {
        const auto saved_component = component_;
        const Distance saved_width = width_[ca];
        for (Vertex v = 0; v < n_; ++v) {
          if (component_[v] == cb) component_[v] = ca;
        }
        width_[ca] = merged;
        adjacency_[e.u] |= std::uint64_t{1} << e.v;
        adjacency_[e.v] |= std::uint64_t{1} << e.u;
        current_.push_back(e);

        descend(index + 1, chosen + 1);

        current_.pop_back();
        adjacency_[e.u] &= ~(std::uint64_t{1} << e.v);
        adjacency_[e.v] &= ~(std::uint64_t{1} << e.u);
        width_[ca] = saved_width;
        component_ = saved_component;
      }
    }
    if (best_ == floor_) return;
    if (can_still_span(index + 1)) descend(index + 1, chosen);
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<Vertex> component_;  // representative per vertex
  std::vector<Distance> width_;    // diameter per representative
  std::vector<Edge> current_;
  std::vector<Edge> best_edges_;
  Distance best_;
  Distance floor_;
};

}  // namespace

std::string_view to_string(SpanMethod m) noexcept {
  switch (m) {
    case SpanMethod::closed_form_2club: return "closed_form_2club";
    case SpanMethod::bfs_bound: return "bfs_bound";
    case SpanMethod::brute_force: return "brute_force";
  }
  return "unknown";
}

Tree bfs_spanning_tree(const Graph& g, Vertex root) {
  g.require_vertex(root);
  const auto dist = bfs_distances(g, root);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == kInfinity) fail(ErrorKind::precondition, "graph is disconnected");
    if (v == root) continue;
    // Neighbours are sorted, so the first one in the previous layer is the
    // lowest-indexed parent.
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] + 1 == dist[v]) {
        edges.emplace_back(v, w);
        break;
      }
    }
  }
  return tree_from_edges(g, edges);
}

SpanResult span_upper_bound(const Graph& g) {
  if (!is_connected(g) || g.vertex_count() == 0) {
    fail(ErrorKind::precondition, "graph is disconnected");
  }
  const MetricProfile profile = metric_profile(g);
  Tree t = bfs_spanning_tree(g, profile.radial_center.front());
  const Distance d = tree_diameter(t);
  return SpanResult{d, std::move(t), SpanMethod::bfs_bound};
}

SpanResult span_2club(const Graph& g) {
  if (g.vertex_count() == 0 || metric_profile(g).diameter != 2) {
    fail(ErrorKind::precondition, "diameter != 2");
  }
  const auto n = static_cast<Vertex>(g.vertex_count());

  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) == n - 1) {
      std::vector<Edge> star;
      for (Vertex w = 0; w < n; ++w) {
        if (w != c) star.emplace_back(c, w);
      }
      return SpanResult{2, tree_from_edges(g, star), SpanMethod::closed_form_2club};
    }
  }

  if (const auto pair = first_dominating_pair(g)) {
    std::vector<Edge> coupled{*pair};
    for (Vertex w = 0; w < n; ++w) {
      if (w == pair->u || w == pair->v) continue;
      coupled.emplace_back(g.adjacent(w, pair->u) ? pair->u : pair->v, w);
    }
    return SpanResult{3, tree_from_edges(g, coupled), SpanMethod::closed_form_2club};
  }

  Tree layered = bfs_spanning_tree(g, metric_profile(g).radial_center.front());
  if (tree_diameter(layered) != 4) {
    fail(ErrorKind::precondition, "layered tree of a span-4 graph must have diameter 4");
  }
  return SpanResult{4, std::move(layered), SpanMethod::closed_form_2club};
}

SpanResult minimum_diameter_spanning_tree(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap) {
    fail(ErrorKind::capacity, "brute-force span limited to " + std::to_string(cap) +
                                  " vertices, got " + std::to_string(g.vertex_count()));
  }
  if (g.vertex_count() > 64) {
    fail(ErrorKind::capacity, "brute-force span supports at most 64 vertices");
  }
  if (g.vertex_count() == 0 || !is_connected(g)) {
    fail(ErrorKind::precondition, "graph is disconnected");
  }
  SpanningTreeSearch search(g);
  const Distance span = search.run();
  return SpanResult{span, tree_from_edges(g, search.best_edges()), SpanMethod::brute_force};
}

Distance span_bruteforce(const Graph& g, std::size_t cap) {
  return minimum_diameter_spanning_tree(g, cap).span;
}

GirthResult girth(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  GirthResult result;
  std::vector<Distance> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (result.girth != kInfinity && 2 * dist[u] >= result.girth) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kInfinity) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          const Distance length = dist[u] + dist[w] + 1;
          if (length < result.girth) {
            result.girth = length;
            std::vector<Vertex> down;  // root .. u
            for (Vertex x = u; x != root; x = parent[x]) down.push_back(x);
            down.push_back(root);
            std::reverse(down.begin(), down.end());
            for (Vertex x = w; x != root; x = parent[x]) down.push_back(x);
            result.witness_cycle = std::move(down);
          }
        }
      }
    }
  }
  return result;
}

}  // namespace acq
