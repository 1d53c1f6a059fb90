/*
 * C interface to the acquaintance-network library.
 *
 * Graphs are opaque handles created from edge-list text or files and
 * released with acq_graph_free. Every fallible call returns an acq_status;
 * on failure a message is available from acq_last_error() on the calling
 * thread until the next call on that thread. Strings returned through `out`
 * parameters are owned by the caller and released with acq_string_free.
 */
#ifndef ACQ_ACQ_H
#define ACQ_ACQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(ACQ_BUILDING_LIBRARY)
#define ACQ_API __attribute__((visibility("default")))
#else
#define ACQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct acq_graph acq_graph;

/* Values double as CLI exit codes where the CLI surfaces them directly. */
typedef enum acq_status {
  ACQ_OK = 0,
  ACQ_E_USAGE = 1,
  ACQ_E_PARSE = 2,
  ACQ_E_PRECONDITION = 3,
  ACQ_E_INVALID_ARGUMENT = 4,
  ACQ_E_CAPACITY = 5,
  ACQ_E_IO = 6,
  ACQ_E_INTERNAL = 7
} acq_status;

typedef enum acq_span_method {
  ACQ_SPAN_CLOSED_FORM = 0, /* diameter-2 graphs only */
  ACQ_SPAN_BRUTE_FORCE = 1, /* exact, small graphs */
  ACQ_SPAN_BFS_BOUND = 2    /* layered-tree upper bound */
} acq_span_method;

typedef enum acq_census_mode {
  ACQ_CENSUS_EXHAUSTIVE = 0,
  ACQ_CENSUS_SAMPLED = 1
} acq_census_mode;

typedef enum acq_format {
  ACQ_FORMAT_JSON = 0,
  ACQ_FORMAT_CSV = 1
} acq_format;

/* Short token naming the failure class: "usage", "parse", "precondition",
 * "invalid_argument", "capacity", "io", "internal"; "ok" for ACQ_OK. */
ACQ_API const char* acq_status_kind(acq_status status);
ACQ_API const char* acq_last_error(void);
ACQ_API const char* acq_version(void);

ACQ_API acq_status acq_graph_parse(const char* text, size_t length, acq_graph** out);
ACQ_API acq_status acq_graph_load(const char* path, acq_graph** out);
ACQ_API void acq_graph_free(acq_graph* graph);
ACQ_API size_t acq_graph_vertex_count(const acq_graph* graph);
ACQ_API size_t acq_graph_edge_count(const acq_graph* graph);
/* Normalised edge-list text of the graph. */
ACQ_API acq_status acq_graph_serialize(const acq_graph* graph, char** out);

ACQ_API void acq_string_free(char* text);

/* Reports. Each writes a canonical JSON document to *out. */
ACQ_API acq_status acq_classify(const acq_graph* graph, char** out);
ACQ_API acq_status acq_span(const acq_graph* graph, acq_span_method method, size_t cap, char** out);
ACQ_API acq_status acq_girth(const acq_graph* graph, char** out);
ACQ_API acq_status acq_detect(const acq_graph* graph, char** out);
/* Smallest spanning tree as JSON, plus DOT text with the tree in bold when
 * dot_out is non-null. Closed form for diameter 2, exhaustive search up to
 * `cap` vertices otherwise. */
ACQ_API acq_status acq_sst(const acq_graph* graph, size_t cap, char** json_out, char** dot_out);
ACQ_API acq_status acq_clubs(const acq_graph* graph, size_t min_size, size_t node_cap, char** out);

/* Experiments. */
ACQ_API acq_status acq_random_sweep(size_t n, double p, uint64_t trials, uint64_t seed,
                                    acq_format format, char** out);
ACQ_API acq_status acq_census(size_t n_max, acq_census_mode mode, uint64_t trials, uint64_t seed,
                              acq_format format, char** out);
ACQ_API acq_status acq_sabidussi(size_t n, uint64_t trials, uint64_t seed, acq_format format,
                                 char** out);
ACQ_API acq_status acq_subclass_count(uint64_t d, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* ACQ_ACQ_H */
