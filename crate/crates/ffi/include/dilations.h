#ifndef DILATIONS_H
#define DILATIONS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum DlStatus {
  DL_STATUS_OK = 0,
  DL_STATUS_NULL_POINTER = 1,
  DL_STATUS_INVALID_UTF8 = 2,
  DL_STATUS_PARSE = 3,
  DL_STATUS_CAPACITY = 4,
  DL_STATUS_DOMAIN = 5,
  DL_STATUS_CONSTRAINT = 6,
  DL_STATUS_WITNESS = 7,
  DL_STATUS_STRUCTURAL = 8,
  DL_STATUS_FEASIBILITY = 9,
  DL_STATUS_BUDGET = 10,
  DL_STATUS_UNKNOWN_NAME = 11,
  DL_STATUS_IO = 12,
  /**
   * The witness does not fit the caller's buffer.
   */
  DL_STATUS_BUFFER_TOO_SMALL = 13,
  DL_STATUS_PANIC = 14,
} DlStatus;

typedef enum DlClass {
  DL_CLASS_GAMMA0 = 0,
  DL_CLASS_GAMMA1 = 1,
  DL_CLASS_MIXED = 2,
} DlClass;

typedef enum DlParameter {
  DL_PARAMETER_GAMMA = 0,
  DL_PARAMETER_NU = 1,
  DL_PARAMETER_TAU = 2,
} DlParameter;

typedef enum DlMode {
  DL_MODE_BRANCH_AND_BOUND = 0,
  DL_MODE_EXHAUSTIVE = 1,
} DlMode;

/**
 * Opaque simple graph.
 */
typedef struct DlGraph DlGraph;

/**
 * Opaque hypergraph.
 */
typedef struct DlHypergraph DlHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Owned by the
 * library and valid until the next call on this thread.
 */
const char *dl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *dl_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void dl_string_free(char *s);

/**
 * Builds a graph from a family spec such as `"corona:cycle:3"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` writable.
 */
enum DlStatus dl_graph_from_family(const char *spec, struct DlGraph **out);

/**
 * # Safety
 * `g6` must be a NUL-terminated string and `out` writable.
 */
enum DlStatus dl_graph_from_graph6(const char *g6, struct DlGraph **out);

/**
 * # Safety
 * `edges` must be a NUL-terminated string and `out` writable.
 */
enum DlStatus dl_graph_from_edge_list(const char *edges, struct DlGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library, freed once.
 */
void dl_graph_free(struct DlGraph *g);

/**
 * # Safety
 * `g` must be a live handle; the out pointers must be writable.
 */
enum DlStatus dl_graph_size(const struct DlGraph *g, size_t *order, size_t *edges);

/**
 * Writes a newly allocated graph6 string to `out`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DlStatus dl_graph_to_graph6(const struct DlGraph *g, char **out);

/**
 * Writes a newly allocated edge list to `out`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DlStatus dl_graph_to_edge_list(const struct DlGraph *g, char **out);

/**
 * The graph as a 2-uniform hypergraph, edges in graph edge order.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DlStatus dl_graph_to_hypergraph(const struct DlGraph *g, struct DlHypergraph **out);

/**
 * Parses the `m <order>` text format.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` writable.
 */
enum DlStatus dl_hypergraph_parse(const char *src, struct DlHypergraph **out);

/**
 * A built-in hypergraph by name, e.g. `"fano"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum DlStatus dl_hypergraph_builtin(const char *name, struct DlHypergraph **out);

/**
 * # Safety
 * `h` must be NULL or a handle from this library, freed once.
 */
void dl_hypergraph_free(struct DlHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; the out pointers must be writable.
 */
enum DlStatus dl_hypergraph_size(const struct DlHypergraph *h,
                                 size_t *order,
                                 size_t *edges,
                                 size_t *rank);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum DlStatus dl_hypergraph_to_text(const struct DlHypergraph *h, char **out);

/**
 * The generalized power `G^{k,s}`. `out_class` may be NULL.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum DlStatus dl_generalized_power(const struct DlGraph *g,
                                   size_t k,
                                   size_t s,
                                   struct DlHypergraph **out,
                                   enum DlClass *out_class);

/**
 * A dilation with copy-block sizes per vertex and additional-block sizes
 * per edge (edges in lexicographic order). `out_class` may be NULL.
 *
 * # Safety
 * The arrays must hold `copy_len` and `extra_len` elements; `g` must be
 * a live handle and `out` writable.
 */
enum DlStatus dl_dilate(const struct DlGraph *g,
                        size_t k,
                        const size_t *copy_sizes,
                        size_t copy_len,
                        const size_t *extra_sizes,
                        size_t extra_len,
                        struct DlHypergraph **out,
                        enum DlClass *out_class);

/**
 * Exact value of `param`. `node_cap` 0 means the library default. When
 * `witness` is non-NULL the sorted witness is copied there; `witness_len`
 * (may be NULL) receives its length either way, and a too-small buffer
 * yields `BufferTooSmall` with the value still written.
 *
 * # Safety
 * `h` must be a live handle, `value` writable, and `witness` (if given)
 * must hold `witness_cap` elements.
 */
enum DlStatus dl_solve(const struct DlHypergraph *h,
                       enum DlParameter param,
                       enum DlMode mode,
                       uint64_t node_cap,
                       size_t *value,
                       size_t *witness,
                       size_t witness_cap,
                       size_t *witness_len);

/**
 * Whether `h` is a Berge-`g`. `node_cap` 0 means the library default.
 *
 * # Safety
 * Handles must be live and `found` writable.
 */
enum DlStatus dl_is_berge(const struct DlGraph *g,
                          const struct DlHypergraph *h,
                          uint64_t node_cap,
                          bool *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DILATIONS_H */
