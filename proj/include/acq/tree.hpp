#pragma once

#include <string_view>
#include <variant>

#include "acq/graph.hpp"

namespace acq {

enum class TreeRejection { empty, disconnected, cyclic };

std::string_view to_string(TreeRejection r) noexcept;

class Tree;
std::variant<Tree, TreeRejection> certify_tree(Graph g);

// A graph certified connected and acyclic (m = n - 1). Only certify_tree
// can produce one.
class Tree {
 public:
  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

 private:
  explicit Tree(Graph g) : graph_(std::move(g)) {}
  friend std::variant<Tree, TreeRejection> certify_tree(Graph g);

  Graph graph_;
};

using TreeCertification = std::variant<Tree, TreeRejection>;

// Connectivity is checked first, so a disconnected graph with a cycle is
// reported as disconnected.
TreeCertification certify_tree(Graph g);

// certify_tree that throws ErrorKind::precondition on rejection.
Tree require_tree(Graph g);

// T': the tree with every endpoint (degree-1 vertex) removed.
Graph prune_endpoints(const Tree& t);

enum class TreeKind { trivial, star, coupled_star, double_star, other };

std::string_view to_string(TreeKind kind) noexcept;

struct TreeClass {
  TreeKind kind = TreeKind::trivial;
  Distance diameter = 0;
  Distance radius = 0;
  VertexSet radial_center;  // one vertex, or two adjacent ones
};

// Kind follows the tree diameter: 0/1 trivial, 2 star, 3 coupled star,
// 4 double star, otherwise other.
TreeClass classify_tree(const Tree& t);

Distance tree_diameter(const Tree& t);

}  // namespace acq
