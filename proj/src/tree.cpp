#include "acq/tree.hpp"

#include <algorithm>

#include "acq/error.hpp"

namespace acq {

namespace {

struct Sweep {
  Vertex farthest = 0;
  std::vector<Distance> dist;
  std::vector<Vertex> parent;
};

// BFS recording parents; ties for the farthest vertex go to the lowest index.
Sweep sweep(const Graph& g, Vertex source) {
  Sweep s;
  s.dist.assign(g.vertex_count(), kInfinity);
  s.parent.assign(g.vertex_count(), source);
  std::vector<Vertex> queue{source};
  s.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (s.dist[w] == kInfinity) {
        s.dist[w] = s.dist[u] + 1;
        s.parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < s.dist.size(); ++v) {
    if (s.dist[v] > s.dist[s.farthest]) s.farthest = v;
  }
  return s;
}

}  // namespace

std::string_view to_string(TreeRejection r) noexcept {
  switch (r) {
    case TreeRejection::empty: return "empty";
    case TreeRejection::disconnected: return "disconnected";
    case TreeRejection::cyclic: return "cyclic";
  }
  return "unknown";
}

std::string_view to_string(TreeKind kind) noexcept {
  switch (kind) {
    case TreeKind::trivial: return "trivial";
    case TreeKind::star: return "star";
    case TreeKind::coupled_star: return "coupled_star";
    case TreeKind::double_star: return "double_star";
    case TreeKind::other: return "other";
  }
  return "unknown";
}

TreeCertification certify_tree(Graph g) {
  if (g.vertex_count() == 0) return TreeRejection::empty;
  if (!is_connected(g)) return TreeRejection::disconnected;
  if (g.edge_count() != g.vertex_count() - 1) return TreeRejection::cyclic;
  return Tree(std::move(g));
}

Tree require_tree(Graph g) {
  auto cert = certify_tree(std::move(g));
  if (auto* r = std::get_if<TreeRejection>(&cert)) {
    fail(ErrorKind::precondition, "not a tree (" + std::string(to_string(*r)) + ")");
  }
  return std::get<Tree>(std::move(cert));
}

Graph prune_endpoints(const Tree& t) {
  const Graph& g = t.graph();
  if (g.vertex_count() < 2) {
    fail(ErrorKind::precondition, "pruning endpoints needs at least two vertices");
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 1) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Distance tree_diameter(const Tree& t) {
  const Sweep first = sweep(t.graph(), 0);
  const Sweep second = sweep(t.graph(), first.farthest);
  return second.dist[second.farthest];
}

TreeClass classify_tree(const Tree& t) {
  const Graph& g = t.graph();
  const Sweep first = sweep(g, 0);
  const Sweep second = sweep(g, first.farthest);
  const Distance d = second.dist[second.farthest];

  // Longest path from second.farthest back to first.farthest.
  std::vector<Vertex> path{second.farthest};
  while (path.back() != first.farthest) path.push_back(second.parent[path.back()]);

  TreeClass c;
  c.diameter = d;
  c.radius = (d + 1) / 2;
  c.radial_center.push_back(path[d / 2]);
  if (d % 2 == 1) c.radial_center.push_back(path[d / 2 + 1]);
  std::sort(c.radial_center.begin(), c.radial_center.end());

  switch (d) {
    case 0:
    case 1: c.kind = TreeKind::trivial; break;
    case 2: c.kind = TreeKind::star; break;
    case 3: c.kind = TreeKind::coupled_star; break;
    case 4: c.kind = TreeKind::double_star; break;
    default: c.kind = TreeKind::other; break;
  }
  return c;
}

}  // namespace acq
