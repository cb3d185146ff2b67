#ifndef SMIS_H
#define SMIS_H

/* Generated by cbindgen from smis-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Graph family selector for `smis_family_missing`.
typedef enum SmisFamily {
  SMIS_FAMILY_ALL = 0,
  SMIS_FAMILY_PLANAR = 1,
  SMIS_FAMILY_BIPARTITE = 2,
  SMIS_FAMILY_FOREST = 3,
} SmisFamily;

// Result of every fallible call.
typedef enum SmisStatus {
  SMIS_STATUS_OK = 0,
  SMIS_STATUS_INVALID_ARGUMENT = 1,
  SMIS_STATUS_PARSE_ERROR = 2,
  SMIS_STATUS_RESOURCE_LIMIT = 3,
  SMIS_STATUS_INCONCLUSIVE = 4,
  SMIS_STATUS_NULL_POINTER = 5,
  SMIS_STATUS_BUFFER_TOO_SMALL = 6,
} SmisStatus;

// Opaque missing-subgraph result handle.
typedef struct SmisFinding SmisFinding;

// Opaque undirected graph handle.
typedef struct SmisGraph SmisGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a graph6 byte string.
//
// # Safety
// `data` must point to `len` readable bytes; `out` must be valid for
// writes.
enum SmisStatus smis_graph_from_graph6(const uint8_t *data, size_t len, struct SmisGraph **out);

// Builds a graph from an endpoint array of `2 * edge_count` entries
// `u0, v0, u1, v1, ...`.
//
// # Safety
// `endpoints` must point to `2 * edge_count` readable values (may be null
// when `edge_count` is 0); `out` must be valid for writes.
enum SmisStatus smis_graph_from_edges(uint32_t n,
                                      const uint32_t *endpoints,
                                      size_t edge_count,
                                      struct SmisGraph **out);

// Releases a graph handle; null is a no-op.
//
// # Safety
// `g` must have been produced by this library and not freed before.
void smis_graph_free(struct SmisGraph *g);

// Vertex count; 0 for null.
//
// # Safety
// `g` must be a live handle or null.
uint32_t smis_graph_vertex_count(const struct SmisGraph *g);

// Edge count; 0 for null.
//
// # Safety
// `g` must be a live handle or null.
uint64_t smis_graph_edge_count(const struct SmisGraph *g);

// 1 if the edge exists, 0 if not, -1 on null or out-of-range input.
//
// # Safety
// `g` must be a live handle or null.
int32_t smis_graph_has_edge(const struct SmisGraph *g, uint32_t u, uint32_t v);

// Disjoint union; the second operand's vertices are shifted.
//
// # Safety
// `a` and `b` must be live handles; `out` must be valid for writes.
enum SmisStatus smis_graph_disjoint_union(const struct SmisGraph *a,
                                          const struct SmisGraph *b,
                                          struct SmisGraph **out);

// Writes the graph6 encoding (NUL-terminated) into a caller buffer.
//
// # Safety
// `g` must be a live handle; `buf` must have `cap` writable bytes;
// `written` must be valid for writes.
enum SmisStatus smis_graph_to_graph6(const struct SmisGraph *g,
                                     char *buf,
                                     size_t cap,
                                     size_t *written);

// Finds the smallest missing induced subgraph of `g`.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SmisStatus smis_find_missing(const struct SmisGraph *g,
                                  uint32_t workers,
                                  struct SmisFinding **out);

// Smallest missing induced subgraph from a restricted family, searching
// orders up to `max_order`.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SmisStatus smis_family_missing(const struct SmisGraph *g,
                                    enum SmisFamily fam,
                                    uint32_t max_order,
                                    uint32_t workers,
                                    struct SmisFinding **out);

// Releases a finding handle; null is a no-op.
//
// # Safety
// `f` must have been produced by this library and not freed before.
void smis_finding_free(struct SmisFinding *f);

// Order (vertex count) of the missing subgraph; 0 for null.
//
// # Safety
// `f` must be a live handle or null.
uint32_t smis_finding_order(const struct SmisFinding *f);

// Clones the witness graph into a fresh handle.
//
// # Safety
// `f` must be a live handle; `out` must be valid for writes.
enum SmisStatus smis_finding_witness(const struct SmisFinding *f, struct SmisGraph **out);

// Writes the witness code as lowercase hex (no 0x prefix, NUL-terminated).
//
// # Safety
// `f` must be a live handle; `buf`/`written` as in `smis_graph_to_graph6`.
enum SmisStatus smis_finding_code_hex(const struct SmisFinding *f,
                                      char *buf,
                                      size_t cap,
                                      size_t *written);

// 1 when the finding came from the counting engine, 0 from the
// enumerate-and-test oracle, -1 for null.
//
// # Safety
// `f` must be a live handle or null.
int32_t smis_finding_used_engine(const struct SmisFinding *f);

// Exact clique number, through the gadget reduction or directly via
// branch and bound.
//
// # Safety
// `g` must be a live handle; `out` must be valid for writes.
enum SmisStatus smis_clique_number(const struct SmisGraph *g,
                                   uint32_t workers,
                                   bool via_reduction,
                                   uint32_t *out);

// Builds the all-but-clique gadget X_i. When `labels` is non-null it
// receives one label per vertex; `labels_written` reports how many were
// (or would be) written.
//
// # Safety
// `out` must be valid for writes; `labels`, when non-null, must have
// `labels_cap` writable entries and `labels_written` must be valid.
enum SmisStatus smis_build_xi(uint32_t i,
                              struct SmisGraph **out,
                              uint32_t *labels,
                              size_t labels_cap,
                              size_t *labels_written);

// Static library version string.
const char *smis_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SMIS_H */
