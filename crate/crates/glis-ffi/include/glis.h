/* C interface to the glis graph layout / interval sandwich solvers. */

#ifndef GLIS_H
#define GLIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum GlisStatus {
  GLIS_STATUS_OK = 0,
  GLIS_STATUS_NULL_POINTER = 1,
  GLIS_STATUS_INVALID_UTF8 = 2,
  GLIS_STATUS_PARSE_ERROR = 3,
  GLIS_STATUS_INVALID_ARGUMENT = 4,
  GLIS_STATUS_TOO_LARGE = 5,
  GLIS_STATUS_NOT_COLORED_LAYOUT = 6,
  GLIS_STATUS_BUFFER_TOO_SMALL = 7,
  GLIS_STATUS_INTERNAL_ERROR = 8,
} GlisStatus;

/**
 * Reason reported when the colored-layout question is answered no.
 */
typedef enum GlisNoReason {
  GLIS_NO_REASON_NONE = 0,
  GLIS_NO_REASON_MONOCHROMATIC_EDGE = 1,
  GLIS_NO_REASON_NO_COLORED_LAYOUT = 2,
} GlisNoReason;

/**
 * Opaque colored-graph handle.
 */
typedef struct GlisGraph GlisGraph;

/**
 * Opaque interval-model handle.
 */
typedef struct GlisModel GlisModel;

/**
 * Certificate check results; `valid` is the conjunction of the other four.
 */
typedef struct GlisVerifyReport {
  bool covers_input_edges;
  bool overlap_matches_union;
  bool properly_colored;
  bool model_invariants;
  bool valid;
} GlisVerifyReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *glis_status_message(enum GlisStatus status);

/**
 * Parses graph-file text into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer.
 */
enum GlisStatus glis_graph_parse(const char *text, struct GlisGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must be a pointer returned by this library and not yet freed.
 */
void glis_graph_free(struct GlisGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
uint32_t glis_graph_vertex_count(const struct GlisGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
uint32_t glis_graph_palette_size(const struct GlisGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
uint32_t glis_graph_edge_count(const struct GlisGraph *g);

/**
 * Canonical graph-file text; free with [`glis_string_free`]. Null on error.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
char *glis_graph_serialize(const struct GlisGraph *g);

/**
 * Parses model-file text into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to writable
 * storage for one pointer.
 */
enum GlisStatus glis_model_parse(const char *text, struct GlisModel **out);

/**
 * Releases a model handle. Null is ignored.
 *
 * # Safety
 * `m` must be a pointer returned by this library and not yet freed.
 */
void glis_model_free(struct GlisModel *m);

/**
 * # Safety
 * `m` must be a live model handle or null.
 */
uint32_t glis_model_vertex_count(const struct GlisModel *m);

/**
 * Doubled endpoints of vertex `v`'s interval.
 *
 * # Safety
 * `m` must be a live model handle; `out_a2` and `out_b2` must be writable.
 */
enum GlisStatus glis_model_interval(const struct GlisModel *m,
                                    uint32_t v,
                                    int64_t *out_a2,
                                    int64_t *out_b2);

/**
 * Canonical model-file text; free with [`glis_string_free`]. Null on error.
 *
 * # Safety
 * `m` must be a live model handle or null.
 */
char *glis_model_serialize(const struct GlisModel *m);

/**
 * Releases a string returned by a serialize function. Null is ignored.
 *
 * # Safety
 * `s` must be a string returned by this library and not yet freed.
 */
void glis_string_free(char *s);

/**
 * Minimum vertex separation. The witness layout is written to
 * `layout_out` (length `layout_len >= n`) unless it is null.
 *
 * # Safety
 * `g` must be a live graph handle; `out_vs` must be writable; `layout_out`
 * must be null or point to at least `layout_len` writable u32 slots.
 */
enum GlisStatus glis_exact_vs(const struct GlisGraph *g,
                              uint32_t *out_vs,
                              uint32_t *layout_out,
                              size_t layout_len);

/**
 * Colored-layout decision. `*out_answer` is 1 for yes (witness written as
 * in [`glis_exact_vs`]) or 0 for no (reason in `*out_reason` if non-null).
 *
 * # Safety
 * `g` must be a live graph handle; `out_answer` must be writable;
 * `layout_out` must be null or point to `layout_len` writable u32 slots;
 * `out_reason` must be null or writable.
 */
enum GlisStatus glis_solve_cvs(const struct GlisGraph *g,
                               int32_t *out_answer,
                               uint32_t *layout_out,
                               size_t layout_len,
                               enum GlisNoReason *out_reason);

/**
 * Interval sandwich decision. `*out_answer` is 1 for yes, in which case a
 * certificate model handle is stored in `*out_model` (unless null); the
 * added edges are recoverable via [`glis_added_edges`].
 *
 * # Safety
 * `g` must be a live graph handle; `out_answer` must be writable;
 * `out_model` must be null or point to writable pointer storage.
 */
enum GlisStatus glis_solve_icg(const struct GlisGraph *g,
                               int32_t *out_answer,
                               struct GlisModel **out_model);

/**
 * Number of overlap edges of `m` that are not edges of `g`.
 *
 * # Safety
 * `g` and `m` must be live handles; `out_count` must be writable.
 */
enum GlisStatus glis_added_edge_count(const struct GlisGraph *g,
                                      const struct GlisModel *m,
                                      uint32_t *out_count);

/**
 * Writes the added edges as flattened pairs `u0 v0 u1 v1 ...` into `buf`
 * (capacity `buf_len` u32 values, so at least twice the edge count).
 *
 * # Safety
 * `g` and `m` must be live handles; `buf` must point to `buf_len` writable
 * u32 slots.
 */
enum GlisStatus glis_added_edges(const struct GlisGraph *g,
                                 const struct GlisModel *m,
                                 uint32_t *buf,
                                 size_t buf_len);

/**
 * Checks `m` as a certificate for `g` (added edges taken to be the
 * overlaps beyond `g`'s edges) and fills `*out_report`.
 *
 * # Safety
 * `g` and `m` must be live handles; `out_report` must be writable.
 */
enum GlisStatus glis_verify(const struct GlisGraph *g,
                            const struct GlisModel *m,
                            struct GlisVerifyReport *out_report);

/**
 * Interval model of a colored layout (`layout`, length `layout_len`,
 * must be a colored layout of `g`). Stores a new model handle in `*out`.
 *
 * # Safety
 * `g` must be a live graph handle; `layout` must point to `layout_len`
 * readable u32 values; `out` must be writable.
 */
enum GlisStatus glis_layout_to_intervals(const struct GlisGraph *g,
                                         const uint32_t *layout,
                                         size_t layout_len,
                                         struct GlisModel **out);

/**
 * Layout read off a model by increasing left endpoint, written to `buf`
 * (capacity `buf_len >= n`).
 *
 * # Safety
 * `m` must be a live model handle; `buf` must point to `buf_len` writable
 * u32 slots (may be null if the model is empty).
 */
enum GlisStatus glis_intervals_to_layout(const struct GlisModel *m, uint32_t *buf, size_t buf_len);

/**
 * Brute-force vertex separation by layout enumeration (small n only).
 *
 * # Safety
 * `g` must be a live graph handle; `out_vs` must be writable.
 */
enum GlisStatus glis_brute_vs(const struct GlisGraph *g, uint32_t *out_vs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GLIS_H */
