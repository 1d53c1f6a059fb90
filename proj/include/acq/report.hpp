#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acq/clubs.hpp"
#include "acq/detectors.hpp"
#include "acq/experiments.hpp"
#include "acq/graph.hpp"
#include "acq/span_girth.hpp"
#include "acq/typology.hpp"

namespace acq {

// Canonical single-line JSON. Keys appear in a fixed order, infinity is the
// string "inf", vertex labels are the original ones, and label sets are
// sorted lexicographically. Report key order:
//
//   n m diameter radius family separable span girth cell cliquishness
//   star_centers central_pairs cutpoints singletons local_cliquelessness
//   moore sst_edges cliqueless_points cliqueless_neighborhood_points
//   multipartite_parts moore_undecided_order alarms
std::string emit_report(const TypologyReport& r);

std::string emit_span(const Graph& g, const SpanResult& s);

std::string emit_girth(const Graph& g, const GirthResult& r);

// Witnesses plus, for diameter-2 graphs, the singleton attachment check.
std::string emit_witnesses(const Graph& g, const StructureWitnesses& w,
                           const std::optional<SingletonCheck>& singletons);

std::string emit_clubs(const Graph& g, const std::vector<TwoClub>& clubs,
                       const std::vector<TypologyReport>& reports);

std::string emit_experiment(const ExperimentResult& r);

// Header line plus one data row.
std::string emit_experiment_csv(const ExperimentResult& r);

// Undirected DOT with vertices and edges in index order; highlighted edges
// are drawn bold. Throws ErrorKind::invalid_argument when a highlighted
// edge is not an edge of g.
std::string emit_dot(const Graph& g, std::optional<std::span<const Edge>> highlight = std::nullopt);

}  // namespace acq
