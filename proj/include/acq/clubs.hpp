#pragma once

#include <cstddef>
#include <vector>

#include "acq/graph.hpp"
#include "acq/typology.hpp"

namespace acq {

struct TwoClub {
  VertexSet members;
  Distance induced_diameter = 0;
  bool maximal = false;
};

inline constexpr std::size_t kDefaultClubNodeCap = 30;

// Induced diameter <= 2 on a non-empty vertex set.
bool is_two_club(const Graph& g, std::span<const Vertex> members);

// Every maximal 2-club with at least `min_size` members, by exhaustive
// branch and bound. Sorted by size descending, then by member indices.
// Refuses hosts above `node_cap` vertices (ErrorKind::capacity) and
// min_size > n (ErrorKind::invalid_argument).
std::vector<TwoClub> maximal_two_clubs(const Graph& g, std::size_t min_size = 1,
                                       std::size_t node_cap = kDefaultClubNodeCap);

// Classifies the subgraph induced by each club. Throws
// ErrorKind::invalid_argument when a club is not a 2-club of g.
std::vector<TypologyReport> classify_clubs(const Graph& g, const std::vector<TwoClub>& clubs);

}  // namespace acq
