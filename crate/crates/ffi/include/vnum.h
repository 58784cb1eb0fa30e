#ifndef VNUM_H
#define VNUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VnumStatus {
  VNUM_STATUS_OK = 0,
  VNUM_STATUS_NULL_POINTER = 1,
  VNUM_STATUS_INVALID_UTF8 = 2,
  VNUM_STATUS_PARSE = 3,
  VNUM_STATUS_INVALID_GRAPH = 4,
  /**
   * The graph has no edges, so the ideal is zero.
   */
  VNUM_STATUS_EDGELESS = 5,
  VNUM_STATUS_CAP_EXCEEDED = 6,
  VNUM_STATUS_INTERNAL = 7,
} VnumStatus;

/**
 * Opaque graph handle.
 */
typedef struct VnumGraph VnumGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *vnum_last_error(void);

/**
 * Parses a graph6 string or an edge list (`u v` per line, 1-based).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum VnumStatus vnum_graph_parse(const char *text, struct VnumGraph **out);

/**
 * Builds a graph on `1..=n` from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (may be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum VnumStatus vnum_graph_from_edges(size_t n,
                                      const uint32_t *edges,
                                      size_t edge_count,
                                      struct VnumGraph **out);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void vnum_graph_free(struct VnumGraph *g);

/**
 * # Safety
 * `g` must be a live handle or NULL.
 */
size_t vnum_graph_vertex_count(const struct VnumGraph *g);

/**
 * # Safety
 * `g` must be a live handle or NULL.
 */
size_t vnum_graph_edge_count(const struct VnumGraph *g);

/**
 * The graph6 encoding; free the result with [`vnum_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum VnumStatus vnum_graph_to_graph6(const struct VnumGraph *g, char **out);

/**
 * `v(J_G)` over the rationals.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum VnumStatus vnum_v_number(const struct VnumGraph *g, uint32_t *out);

/**
 * `v_∅(J_G)`, which equals the smallest minimal completion set size.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum VnumStatus vnum_v_empty(const struct VnumGraph *g, uint32_t *out);

/**
 * v-number of the lex initial ideal.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum VnumStatus vnum_v_initial(const struct VnumGraph *g, uint32_t *out);

/**
 * `reg(S/J_G)` with GF(2) homology. Refuses graphs with more than `cap_n`
 * vertices; a zero `budget_ms` means no time limit. `confirmed` is false
 * when the budget ran out and `out` holds only a lower bound.
 *
 * # Safety
 * `g` must be a live handle; `out` and `confirmed` must be writable.
 */
enum VnumStatus vnum_regularity(const struct VnumGraph *g,
                                size_t cap_n,
                                uint64_t budget_ms,
                                uint32_t *out,
                                bool *confirmed);

/**
 * Full analysis as JSON; free the result with [`vnum_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum VnumStatus vnum_analyze_json(const struct VnumGraph *g, char **out);

/**
 * Frees a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void vnum_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VNUM_H */
