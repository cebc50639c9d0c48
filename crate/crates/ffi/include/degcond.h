#ifndef DEGCOND_H
#define DEGCOND_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DcStatus {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_ARGUMENT = 1,
  DC_STATUS_INVALID_UTF8 = 2,
  DC_STATUS_PARSE_ERROR = 3,
  DC_STATUS_NOT_GRAPHICAL = 4,
  DC_STATUS_OUT_OF_DOMAIN = 5,
  DC_STATUS_SCALE_EXCEEDED = 6,
  DC_STATUS_NO_WITNESS = 7,
  DC_STATUS_OVERFLOW = 8,
  DC_STATUS_INTERNAL = 9,
  DC_STATUS_PANIC = 10,
  DC_STATUS_BUFFER_TOO_SMALL = 11,
} DcStatus;

// Opaque simple graph.
typedef struct DcGraph DcGraph;

// Opaque degree sequence.
typedef struct DcSequence DcSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// Valid until the next call on this thread.
const char *dc_last_error(void);

// Library version, static storage.
const char *dc_version(void);

// # Safety
// `s` must come from this library or be null.
void dc_string_free(char *s);

// Parses `"1,2,2,3"`, `"1 2 2 3"` or `"1^1 2^2 3"`.
//
// # Safety
// `input` must be a NUL-terminated string; `out` must be writable.
enum DcStatus dc_sequence_parse(const char *input, struct DcSequence **out);

// # Safety
// `degrees` must point to `len` values; `out` must be writable.
enum DcStatus dc_sequence_from_degrees(const size_t *degrees, size_t len, struct DcSequence **out);

// # Safety
// `seq` must come from this library or be null.
void dc_sequence_free(struct DcSequence *seq);

// Number of entries, 0 for a null handle.
//
// # Safety
// `seq` must be a live handle or null.
size_t dc_sequence_len(const struct DcSequence *seq);

// Copies the nondecreasing degrees into `buf`. Fails with
// `BufferTooSmall` when `cap` is below the length.
//
// # Safety
// `buf` must have room for `cap` values.
enum DcStatus dc_sequence_degrees(const struct DcSequence *seq, size_t *buf, size_t cap);

// Run-length text such as `1^1 2^2 3^1`.
//
// # Safety
// `seq` must be live; `out` must be writable.
enum DcStatus dc_sequence_render(const struct DcSequence *seq, char **out);

// # Safety
// `seq` must be live; `out` must be writable.
enum DcStatus dc_sequence_is_graphical(const struct DcSequence *seq, bool *out);

// Whether `a` is componentwise at least `b`.
//
// # Safety
// `a`, `b` must be live; `out` must be writable.
enum DcStatus dc_sequence_majorizes(const struct DcSequence *a,
                                    const struct DcSequence *b,
                                    bool *out);

// # Safety
// `seq` must be live; `out` must be writable.
enum DcStatus dc_sequence_realize(const struct DcSequence *seq, struct DcGraph **out);

// # Safety
// `g` must come from this library or be null.
void dc_graph_free(struct DcGraph *g);

// # Safety
// `g` must be live or null.
size_t dc_graph_order(const struct DcGraph *g);

// # Safety
// `g` must be live or null.
size_t dc_graph_edge_count(const struct DcGraph *g);

// False for a null handle or out-of-range vertices.
//
// # Safety
// `g` must be live or null.
bool dc_graph_has_edge(const struct DcGraph *g, size_t u, size_t v);

// `{"n": .., "edges": [[u, v], ..]}`.
//
// # Safety
// `g` must be live; `out` must be writable.
enum DcStatus dc_graph_to_json(const struct DcGraph *g, char **out);

// Evaluates a registry row (e.g. `"ham"`, `"tough"` with `param` `"3/2"`;
// `param` may be null for rows without one). `report`, if non-null,
// receives the verdict as JSON.
//
// # Safety
// Strings must be NUL-terminated; `seq` live; `declared` writable.
enum DcStatus dc_condition_check(const char *cond,
                                 const char *param,
                                 const struct DcSequence *seq,
                                 bool *declared,
                                 char **report);

// Decides whether every realization has `prop` (`"hamiltonian"`,
// `"k-connected:2"`, ...). When it does not and `counterexample` is
// non-null, a violating realization is stored there.
//
// # Safety
// `prop` NUL-terminated; `seq` live; `out` writable.
enum DcStatus dc_forcibly(const struct DcSequence *seq,
                          const char *prop,
                          bool *out,
                          struct DcGraph **counterexample);

// Weak-optimality check of a best-monotone row at one length; the full
// report goes to `report` as JSON when non-null.
//
// # Safety
// Strings NUL-terminated; `passed` writable.
enum DcStatus dc_verify(const char *cond, const char *param, size_t n, bool *passed, char **report);

// Sink report for `prop` at length `n` (at most 7), as JSON.
//
// # Safety
// `prop` NUL-terminated; `report` writable.
enum DcStatus dc_sinks(const char *prop, size_t n, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEGCOND_H */
