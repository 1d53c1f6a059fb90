#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "acq/detectors.hpp"
#include "acq/graph.hpp"

namespace acq {

enum class Family { clique, star, coterie, social_circle, hamlet, not_acquaintance };
enum class Cliquishness { cliquish, cliqueless, acyclic, not_applicable };

std::string_view to_string(Family f) noexcept;
std::string_view to_string(Cliquishness c) noexcept;

// (span, girth) pair of the diameter-2 typology.
struct TypologyCell {
  Distance span = 0;
  Distance girth = 0;
  friend bool operator==(const TypologyCell&, const TypologyCell&) = default;
};

// The six feasible cells for diameter 2.
inline constexpr TypologyCell kDiameterTwoCells[] = {
    {2, 3}, {3, 3}, {3, 4}, {4, 3}, {4, 4}, {4, 5}};

bool is_feasible_cell(TypologyCell cell) noexcept;

// Raised when a diameter-2, girth-5 graph turns out irregular, which no
// graph can do; its presence means a bug upstream.
inline constexpr std::string_view kIrregularGirthFiveAlarm = "irregular_diameter2_girth5";

struct TypologyReport {
  std::vector<std::string> labels;  // vertex labels of the classified graph
  std::size_t n = 0;
  std::size_t m = 0;
  Distance diameter = 0;
  Distance radius = 0;
  Family family = Family::not_acquaintance;
  bool separable = false;
  std::optional<Distance> span;
  Distance girth = kInfinity;
  std::optional<TypologyCell> cell;
  Cliquishness cliquishness = Cliquishness::not_applicable;
  StructureWitnesses witnesses;
  VertexSet cutpoints;
  std::vector<Edge> sst_edges;
  bool local_cliquelessness = false;
  bool moore = false;
  bool moore_undecided_order = false;  // n == 3250
  std::vector<std::string> alarms;
};

// Total: diameter <= 1 is a clique, diameter 2 gets the full typology, and
// anything else (including disconnected graphs) is not_acquaintance with
// metrics filled and typology fields absent.
TypologyReport classify(const Graph& g);

// Number of (span, girth) subclasses among graphs of diameter d >= 1.
std::uint64_t subclass_count(std::uint64_t d);

// Certificates for the three span classes of a diameter-2 graph.
struct SpanTwoCertificate {
  Vertex center;
};
struct SpanThreeCertificate {
  Edge central_pair;
};
struct SpanFourCertificate {
  // For every edge (u, v), in edge order, a vertex adjacent to neither.
  std::vector<std::pair<Edge, Vertex>> undominated;
};
using SpanCertificate = std::variant<SpanTwoCertificate, SpanThreeCertificate, SpanFourCertificate>;

// Decides the span class of a diameter-2 graph from neighbourhood cover
// alone. Throws ErrorKind::precondition when diameter != 2.
SpanCertificate span_certificate(const Graph& g);

Distance certified_span(const SpanCertificate& c) noexcept;

}  // namespace acq
