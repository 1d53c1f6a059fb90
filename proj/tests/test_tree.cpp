#include <gtest/gtest.h>

#include <functional>

#include "acq/small_graph.hpp"
#include "acq/tree.hpp"
#include "fixtures.hpp"

using namespace acq;

namespace {

// Coupled star: hubs 0 and 1, `a` leaves on 0 and `b` leaves on 1.
Graph coupled_star(std::size_t a, std::size_t b) {
  std::vector<Edge> e{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < a; ++i) e.emplace_back(0, next++);
  for (std::size_t i = 0; i < b; ++i) e.emplace_back(1, next++);
  return Graph::from_edges(next, e);
}

// A double star on 11 vertices: center 0 with branches 1..3, each branch
// carrying leaves.
Graph double_star_11() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}, {3, 9}, {3, 10}};
  return Graph::from_edges(11, e);
}

// Every longest path of a tree, as vertex sequences.
std::vector<std::vector<Vertex>> longest_paths(const Graph& g) {
  std::vector<std::vector<Vertex>> best;
  std::size_t best_len = 0;
  std::vector<Vertex> cur;
  std::function<void(Vertex, Vertex)> walk = [&](Vertex at, Vertex from) {
    cur.push_back(at);
    if (cur.size() > best_len) {
      best_len = cur.size();
      best.clear();
    }
    if (cur.size() == best_len) best.push_back(cur);
    for (Vertex w : g.neighbors(at))
      if (w != from) walk(w, at);
    cur.pop_back();
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) walk(s, static_cast<Vertex>(-1));
  return best;
}

}  // namespace

TEST(CertifyTree, Examples) {
  EXPECT_TRUE(std::holds_alternative<Tree>(certify_tree(fx::path(5))));
  const auto c4 = certify_tree(fx::cycle(4));
  ASSERT_TRUE(std::holds_alternative<TreeRejection>(c4));
  EXPECT_EQ(std::get<TreeRejection>(c4), TreeRejection::cyclic);

  std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto split = certify_tree(Graph::from_edges(4, tri));
  ASSERT_TRUE(std::holds_alternative<TreeRejection>(split));
  EXPECT_EQ(std::get<TreeRejection>(split), TreeRejection::disconnected);

  const auto empty = certify_tree(Graph{});
  ASSERT_TRUE(std::holds_alternative<TreeRejection>(empty));
  EXPECT_EQ(std::get<TreeRejection>(empty), TreeRejection::empty);

  EXPECT_EQ(fx::error_kind([] { require_tree(fx::cycle(4)); }), ErrorKind::precondition);
}

TEST(PruneEndpoints, Examples) {
  const Graph s6 = prune_endpoints(require_tree(fx::star(6)));
  EXPECT_EQ(s6.vertex_count(), 1u);

  const Graph cs4 = prune_endpoints(require_tree(fx::path(4)));
  EXPECT_EQ(cs4.vertex_count(), 2u);
  EXPECT_EQ(cs4.edge_count(), 1u);

  const Graph ds5 = prune_endpoints(require_tree(fx::path(5)));
  EXPECT_EQ(ds5.vertex_count(), 3u);
  EXPECT_EQ(ds5.edge_count(), 2u);
  EXPECT_EQ(metric_profile(ds5).diameter, 2u);

  EXPECT_EQ(fx::error_kind([] { prune_endpoints(require_tree(fx::path(1))); }),
            ErrorKind::precondition);
}

TEST(ClassifyTree, Examples) {
  const TreeClass s6 = classify_tree(require_tree(fx::star(6)));
  EXPECT_EQ(s6.kind, TreeKind::star);
  EXPECT_EQ(s6.radius, 1u);
  EXPECT_EQ(s6.radial_center, (VertexSet{0}));

  const TreeClass cs9 = classify_tree(require_tree(coupled_star(3, 4)));
  EXPECT_EQ(cs9.kind, TreeKind::coupled_star);
  EXPECT_EQ(cs9.radius, 2u);
  EXPECT_EQ(cs9.radial_center, (VertexSet{0, 1}));

  const TreeClass ds11 = classify_tree(require_tree(double_star_11()));
  EXPECT_EQ(ds11.kind, TreeKind::double_star);
  EXPECT_EQ(ds11.radius, 2u);
  EXPECT_EQ(ds11.radial_center, (VertexSet{0}));

  EXPECT_EQ(classify_tree(require_tree(fx::path(1))).kind, TreeKind::trivial);
  EXPECT_EQ(classify_tree(require_tree(fx::path(2))).kind, TreeKind::trivial);
  EXPECT_EQ(classify_tree(require_tree(fx::path(6))).kind, TreeKind::other);
}

TEST(ClassifyTree, ExhaustiveInvariantsUpToTen) {
  // Acyclicity is hereditary, so it can prune the generation.
  const auto acyclic = [](const SmallGraph& g) {
    const Graph h = g.to_graph();
    std::size_t comps = components(h).size();
    return h.edge_count() + comps == h.vertex_count();
  };
  const std::size_t expected_trees[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t trees = 0;
    for (const SmallGraph& sg : unlabeled_graphs(n, acyclic)) {
      const Graph g = sg.to_graph();
      if (!is_connected(g)) continue;
      ++trees;
      const Tree t = require_tree(g);
      const TreeClass c = classify_tree(t);
      const Distance d = metric_profile(g).diameter;
      ASSERT_EQ(c.diameter, d);
      ASSERT_EQ(tree_diameter(t), d);
      if (d % 2 == 0) {
        ASSERT_EQ(c.radial_center.size(), 1u);
        ASSERT_EQ(c.radius, d / 2);
      } else {
        ASSERT_EQ(c.radial_center.size(), 2u);
        ASSERT_TRUE(g.adjacent(c.radial_center[0], c.radial_center[1]));
        ASSERT_EQ(c.radius, d / 2 + 1);
      }
      ASSERT_EQ(c.radial_center, metric_profile(g).radial_center);
      for (const auto& path : longest_paths(g))
        for (Vertex z : c.radial_center)
          ASSERT_NE(std::find(path.begin(), path.end(), z), path.end());

      const TreeKind want = d <= 1 ? TreeKind::trivial
                            : d == 2 ? TreeKind::star
                            : d == 3 ? TreeKind::coupled_star
                            : d == 4 ? TreeKind::double_star
                                     : TreeKind::other;
      ASSERT_EQ(c.kind, want);
      if (c.kind == TreeKind::coupled_star) {
        ASSERT_GE(n, 4u);
      }
      if (c.kind == TreeKind::double_star) {
        ASSERT_GE(n, 5u);
        // T' is a star S_k with k >= 3 exactly for double stars.
        const Graph pruned = prune_endpoints(t);
        ASSERT_EQ(metric_profile(pruned).diameter, 2u);
        ASSERT_GE(pruned.vertex_count(), 3u);
      }
      if (n >= 3) {
        const auto pruned = certify_tree(prune_endpoints(t));
        ASSERT_TRUE(std::holds_alternative<Tree>(pruned));
      }
    }
    EXPECT_EQ(trees, expected_trees[n]) << "n=" << n;
  }
}
