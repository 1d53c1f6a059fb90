#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

// Bitmask adjacency for graphs of at most 16 vertices, used by the
// exhaustive sweeps. Vertex i of a SmallGraph becomes label "i".
class SmallGraph {
 public:
  static constexpr std::size_t kMaxOrder = 16;

  explicit SmallGraph(std::size_t n = 0);

  // Edges enumerated as the set bits of `mask` over pairs (i < j) in
  // lexicographic order: bit 0 is (0,1), bit 1 is (0,2), ...
  static SmallGraph from_pair_mask(std::size_t n, std::uint64_t mask);
  static SmallGraph from_graph(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::uint16_t row(std::size_t v) const noexcept { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return (rows_[u] >> v) & 1U; }
  std::size_t edge_count() const noexcept;

  void add_edge(std::size_t u, std::size_t v) noexcept;

  SmallGraph complement() const;

  // Induced on the first n - 1 vertices.
  SmallGraph without_last_vertex() const;

  // kInfinity when disconnected; 0 for fewer than two vertices.
  Distance diameter() const noexcept;

  Graph to_graph() const;

  // Inverse of from_pair_mask; valid for n <= 11.
  std::uint64_t pair_mask() const noexcept;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  std::size_t n_;
  std::array<std::uint16_t, kMaxOrder> rows_{};
};

// Largest pair mask over all relabellings; equal exactly for isomorphic
// graphs. n <= 11.
std::uint64_t canonical_key(const SmallGraph& g);

// Every graph on n labelled vertices (all 2^(n(n-1)/2) pair masks), n <= 8.
void for_each_labeled_graph(std::size_t n, const std::function<void(const SmallGraph&)>& visit);

// One representative per isomorphism class on n <= 11 vertices, built by
// vertex addition. `keep` must be hereditary (closed under deleting any
// vertex); it prunes the generation. Results are canonical and sorted by key.
std::vector<SmallGraph> unlabeled_graphs(std::size_t n,
                                         const std::function<bool(const SmallGraph&)>& keep = {});

}  // namespace acq
