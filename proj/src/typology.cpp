#include "acq/typology.hpp"

#include <algorithm>

#include "acq/error.hpp"
#include "acq/span_girth.hpp"

namespace acq {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::clique: return "clique";
    case Family::star: return "star";
    case Family::coterie: return "coterie";
    case Family::social_circle: return "social_circle";
    case Family::hamlet: return "hamlet";
    case Family::not_acquaintance: return "not_acquaintance";
  }
  return "unknown";
}

std::string_view to_string(Cliquishness c) noexcept {
  switch (c) {
    case Cliquishness::cliquish: return "cliquish";
    case Cliquishness::cliqueless: return "cliqueless";
    case Cliquishness::acyclic: return "acyclic";
    case Cliquishness::not_applicable: return "n/a";
  }
  return "unknown";
}

bool is_feasible_cell(TypologyCell cell) noexcept {
  return std::find(std::begin(kDiameterTwoCells), std::end(kDiameterTwoCells), cell) !=
         std::end(kDiameterTwoCells);
}

TypologyReport classify(const Graph& g) {
  TypologyReport r;
  r.labels = g.labels();
  r.n = g.vertex_count();
  r.m = g.edge_count();
  const MetricProfile profile = metric_profile(g);
  r.diameter = profile.diameter;
  r.radius = profile.radius;
  r.girth = girth(g).girth;
  r.witnesses = detect_structures(g);
  r.moore = r.witnesses.moore;
  r.moore_undecided_order = r.moore && r.n == kUndecidedMooreOrder;
  r.local_cliquelessness = !r.witnesses.cliqueless_neighborhood_points.empty();

  const bool connected = r.n > 0 && profile.diameter != kInfinity;
  if (connected) {
    r.cutpoints = cutpoints(g);
    r.separable = !r.cutpoints.empty();
  }

  if (r.n == 0 || profile.diameter <= 1) {
    r.family = Family::clique;
    return r;
  }
  if (profile.diameter != 2) {
    r.family = Family::not_acquaintance;
    return r;
  }

  const SpanResult span = span_2club(g);
  r.span = span.span;
  r.sst_edges = span.witness_tree.graph().edges();

  switch (span.span) {
    case 2: r.family = r.m + 1 == r.n ? Family::star : Family::coterie; break;
    case 3: r.family = Family::social_circle; break;
    default: r.family = Family::hamlet; break;
  }

  if (r.girth == kInfinity) {
    r.cliquishness = Cliquishness::acyclic;
  } else {
    r.cliquishness = r.girth == 3 ? Cliquishness::cliquish : Cliquishness::cliqueless;
    r.cell = TypologyCell{span.span, r.girth};
  }

  if (r.girth == 5) {
    const DegreeProfile degrees = degree_profile(g);
    if (degrees.min_degree != degrees.max_degree) {
      r.alarms.emplace_back(kIrregularGirthFiveAlarm);
    }
  }
  return r;
}

std::uint64_t subclass_count(std::uint64_t d) {
  if (d == 0) fail(ErrorKind::invalid_argument, "diameter must be >= 1");
  // Sum over t = d .. 2d of (t - 1).
  return (d + 1) * (3 * d - 2) / 2;
}

SpanCertificate span_certificate(const Graph& g) {
  if (g.vertex_count() == 0 || metric_profile(g).diameter != 2) {
    fail(ErrorKind::precondition, "diameter != 2");
  }
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 == n) return SpanTwoCertificate{v};
  }
  SpanFourCertificate four;
  for (const Edge& e : g.edges()) {
    const NeighborPartition p = neighbor_partition(g, e.u, e.v);
    if (p.neither.empty()) return SpanThreeCertificate{e};
    four.undominated.emplace_back(e, p.neither.front());
  }
  return four;
}

Distance certified_span(const SpanCertificate& c) noexcept {
  return static_cast<Distance>(c.index() + 2);
}

}  // namespace acq
