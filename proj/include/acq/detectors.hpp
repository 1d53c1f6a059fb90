#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

struct StructureWitnesses {
  VertexSet star_centers;
  std::vector<Edge> central_pairs;
  VertexSet singletons;
  VertexSet cliqueless_points;
  VertexSet cliqueless_neighborhood_points;
  std::optional<std::vector<VertexSet>> multipartite_parts;
  bool moore = false;
};

// Vertices of degree n - 1.
VertexSet spanning_star_centers(const Graph& g);

// Adjacent pairs (u, v) with every other vertex adjacent to u or v.
// Requires a connected graph.
std::vector<Edge> central_neighbor_pairs(const Graph& g);

struct SingletonCheck {
  VertexSet singletons;
  // Vacuously true without singletons; otherwise there must be exactly one
  // star center and every singleton hangs from it.
  bool attached_to_unique_center = true;
};

SingletonCheck singleton_check(const Graph& g);

// Vertices on no triangle, i.e. whose neighbourhood induces no edge.
VertexSet cliqueless_points(const Graph& g);

// Vertices all of whose neighbours are cliqueless.
VertexSet cliqueless_neighborhood_points(const Graph& g);

// The parts of g when it is complete multipartite: the components of the
// complement, each of which must be complete there. Parts ordered by
// smallest member.
std::optional<std::vector<VertexSet>> complete_multipartite(const Graph& g);

// Diameter 2, girth 5, regular, and n in {5, 10, 50, 3250}.
bool moore_check(const Graph& g);

// Orders a diameter-2 Moore graph can have; 3250 is the undecided case.
bool is_moore_order(std::size_t n) noexcept;
inline constexpr std::size_t kUndecidedMooreOrder = 3250;

struct PropertyCheck {
  char item = 'a';
  std::string description;
  bool passed = true;
  std::vector<Vertex> counterexample;  // first violating vertices, if any
};

struct CliquelessHamletChecklist {
  std::array<PropertyCheck, 6> items;
  bool all_passed() const noexcept;
};

inline constexpr std::size_t kDefaultCycleCap = 64;

// Items (a)-(f) for a cliqueless hamlet (span 4, girth 4). Throws
// ErrorKind::precondition when g is not one, and ErrorKind::capacity above
// `cycle_cap` vertices, since (e) enumerates every 4- and 5-cycle.
CliquelessHamletChecklist cliqueless_hamlet_properties(const Graph& g,
                                                       std::size_t cycle_cap = kDefaultCycleCap);

// All witnesses at once; central pairs are left empty for disconnected g.
StructureWitnesses detect_structures(const Graph& g);

}  // namespace acq
