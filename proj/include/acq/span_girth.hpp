#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "acq/graph.hpp"
#include "acq/tree.hpp"

namespace acq {

enum class SpanMethod { closed_form_2club, bfs_bound, brute_force };

std::string_view to_string(SpanMethod m) noexcept;

// Span t(G): the least diameter over all spanning trees, with a tree that
// attains the reported value.
struct SpanResult {
  Distance span;
  Tree witness_tree;
  SpanMethod method;
};

struct GirthResult {
  Distance girth = kInfinity;        // kInfinity for forests
  std::vector<Vertex> witness_cycle;  // consecutive vertices, empty if acyclic
};

inline constexpr std::size_t kDefaultBruteForceCap = 9;

// Layered tree around `root`: every vertex at distance i keeps exactly one
// edge, to its lowest-indexed neighbour at distance i - 1. The result has
// diameter at most 2 * ecc(root).
Tree bfs_spanning_tree(const Graph& g, Vertex root);

// Layered tree from the lowest-indexed radial point. Valid for any
// connected graph; method = bfs_bound and span is the tree's diameter, an
// upper bound on t(G).
SpanResult span_upper_bound(const Graph& g);

// Exact span for diameter-2 graphs: 2 when some vertex has degree n - 1,
// else 3 when some adjacent pair dominates every other vertex, else 4.
// Throws ErrorKind::precondition ("diameter != 2") otherwise.
SpanResult span_2club(const Graph& g);

// Exhaustive branch-and-bound over all spanning trees, returning an optimal
// tree. Refuses graphs with more than `cap` vertices (ErrorKind::capacity)
// and disconnected graphs (ErrorKind::precondition).
SpanResult minimum_diameter_spanning_tree(const Graph& g,
                                          std::size_t cap = kDefaultBruteForceCap);

Distance span_bruteforce(const Graph& g, std::size_t cap = kDefaultBruteForceCap);

GirthResult girth(const Graph& g);

}  // namespace acq
