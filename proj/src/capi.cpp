#include "acq/acq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <span>
#include <string>

#include "acq/clubs.hpp"
#include "acq/detectors.hpp"
#include "acq/edge_list.hpp"
#include "acq/error.hpp"
#include "acq/experiments.hpp"
#include "acq/report.hpp"
#include "acq/span_girth.hpp"
#include "acq/typology.hpp"

struct acq_graph {
  acq::Graph graph;
};

namespace {

thread_local std::string last_error;

acq_status status_of(acq::ErrorKind kind) {
  switch (kind) {
    case acq::ErrorKind::invalid_argument: return ACQ_E_INVALID_ARGUMENT;
    case acq::ErrorKind::parse: return ACQ_E_PARSE;
    case acq::ErrorKind::precondition: return ACQ_E_PRECONDITION;
    case acq::ErrorKind::capacity: return ACQ_E_CAPACITY;
    case acq::ErrorKind::io: return ACQ_E_IO;
  }
  return ACQ_E_INTERNAL;
}

template <class Body>
acq_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return ACQ_OK;
  } catch (const acq::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return ACQ_E_INTERNAL;
}

char* duplicate(const std::string& text) {
  auto* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(const void* pointer, const char* what) {
  if (pointer == nullptr) {
    acq::fail(acq::ErrorKind::invalid_argument, std::string(what) + " must not be null");
  }
}

template <class Produce>
acq_status produce_into(char** out, Produce&& produce) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const std::string text = produce();
    *out = duplicate(text);
  });
}

std::string format_experiment(const acq::ExperimentResult& r, acq_format format) {
  return format == ACQ_FORMAT_CSV ? acq::emit_experiment_csv(r) : acq::emit_experiment(r);
}

}  // namespace

extern "C" {

const char* acq_status_kind(acq_status status) {
  switch (status) {
    case ACQ_OK: return "ok";
    case ACQ_E_USAGE: return "usage";
    case ACQ_E_PARSE: return "parse";
    case ACQ_E_PRECONDITION: return "precondition";
    case ACQ_E_INVALID_ARGUMENT: return "invalid_argument";
    case ACQ_E_CAPACITY: return "capacity";
    case ACQ_E_IO: return "io";
    case ACQ_E_INTERNAL: return "internal";
  }
  return "internal";
}

const char* acq_last_error(void) { return last_error.c_str(); }

const char* acq_version(void) { return "1.0.0"; }

acq_status acq_graph_parse(const char* text, size_t length, acq_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(text, "text");
    *out = new acq_graph{acq::parse_edge_list(std::string_view(text, length))};
  });
}

acq_status acq_graph_load(const char* path, acq_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(path, "path");
    *out = new acq_graph{acq::load_edge_list(path)};
  });
}

void acq_graph_free(acq_graph* graph) { delete graph; }

size_t acq_graph_vertex_count(const acq_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.vertex_count();
}

size_t acq_graph_edge_count(const acq_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

acq_status acq_graph_serialize(const acq_graph* graph, char** out) {
  return produce_into(out, [&] {
    require(graph, "graph");
    return acq::serialize_edge_list(graph->graph);
  });
}

void acq_string_free(char* text) { std::free(text); }

acq_status acq_classify(const acq_graph* graph, char** out) {
  return produce_into(out, [&] {
    require(graph, "graph");
    return acq::emit_report(acq::classify(graph->graph));
  });
}

acq_status acq_span(const acq_graph* graph, acq_span_method method, size_t cap, char** out) {
  return produce_into(out, [&] {
    require(graph, "graph");
    const acq::Graph& g = graph->graph;
    switch (method) {
      case ACQ_SPAN_CLOSED_FORM: return acq::emit_span(g, acq::span_2club(g));
      case ACQ_SPAN_BRUTE_FORCE:
        return acq::emit_span(g, acq::minimum_diameter_spanning_tree(g, cap));
      case ACQ_SPAN_BFS_BOUND: return acq::emit_span(g, acq::span_upper_bound(g));
    }
    acq::fail(acq::ErrorKind::invalid_argument, "unknown span method");
  });
}

acq_status acq_girth(const acq_graph* graph, char** out) {
  return produce_into(out, [&] {
    require(graph, "graph");
    return acq::emit_girth(graph->graph, acq::girth(graph->graph));
  });
}

acq_status acq_detect(const acq_graph* graph, char** out) {
  return produce_into(out, [&] {
    require(graph, "graph");
    const acq::Graph& g = graph->graph;
    std::optional<acq::SingletonCheck> singletons;
    if (g.vertex_count() > 0 && acq::metric_profile(g).diameter == 2) {
      singletons = acq::singleton_check(g);
    }
    return acq::emit_witnesses(g, acq::detect_structures(g), singletons);
  });
}

acq_status acq_sst(const acq_graph* graph, size_t cap, char** json_out, char** dot_out) {
  return guarded([&] {
    require(graph, "graph");
    require(json_out, "json_out");
    *json_out = nullptr;
    if (dot_out != nullptr) *dot_out = nullptr;
    const acq::Graph& g = graph->graph;
    const bool two_club = g.vertex_count() > 0 && acq::metric_profile(g).diameter == 2;
    const acq::SpanResult result =
        two_club ? acq::span_2club(g) : acq::minimum_diameter_spanning_tree(g, cap);
    const std::string json = acq::emit_span(g, result);
    std::string dot;
    if (dot_out != nullptr) {
      const auto tree_edges = result.witness_tree.graph().edges();
      dot = acq::emit_dot(g, std::span<const acq::Edge>(tree_edges));
    }
    *json_out = duplicate(json);
    if (dot_out != nullptr) {
      try {
        *dot_out = duplicate(dot);
      } catch (...) {
        std::free(*json_out);
        *json_out = nullptr;
        throw;
      }
    }
  });
}

acq_status acq_clubs(const acq_graph* graph, size_t min_size, size_t node_cap, char** out) {
  return produce_into(out, [&] {
    require(graph, "graph");
    const auto clubs = acq::maximal_two_clubs(graph->graph, min_size, node_cap);
    return acq::emit_clubs(graph->graph, clubs, acq::classify_clubs(graph->graph, clubs));
  });
}

acq_status acq_random_sweep(size_t n, double p, uint64_t trials, uint64_t seed,
                            acq_format format, char** out) {
  return produce_into(out, [&] {
    return format_experiment(acq::diameter2_fraction(n, p, trials, seed), format);
  });
}

acq_status acq_census(size_t n_max, acq_census_mode mode, uint64_t trials, uint64_t seed,
                      acq_format format, char** out) {
  return produce_into(out, [&] {
    const auto m = mode == ACQ_CENSUS_SAMPLED ? acq::CensusMode::sampled
                                              : acq::CensusMode::exhaustive;
    return format_experiment(acq::figure1_census(n_max, m, trials, seed), format);
  });
}

acq_status acq_sabidussi(size_t n, uint64_t trials, uint64_t seed, acq_format format,
                         char** out) {
  return produce_into(out, [&] {
    return format_experiment(acq::sabidussi_scan(n, trials, seed), format);
  });
}

acq_status acq_subclass_count(uint64_t d, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = acq::subclass_count(d);
  });
}

}  // extern "C"
