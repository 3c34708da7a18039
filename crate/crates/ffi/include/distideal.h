#ifndef DISTIDEAL_H
#define DISTIDEAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes of every fallible function.
typedef enum DiStatus {
  DI_STATUS_OK = 0,
  // A required pointer argument was NULL.
  DI_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  DI_STATUS_INVALID_UTF8 = 2,
  // A graph6 string or edge array could not be read.
  DI_STATUS_PARSE = 3,
  // The graph is disconnected, so distances are undefined.
  DI_STATUS_DISCONNECTED = 4,
  // An index, order or vertex is out of range.
  DI_STATUS_OUT_OF_RANGE = 5,
  // A Gröbner completion ran out of its budget.
  DI_STATUS_BUDGET_EXCEEDED = 6,
  // An unknown catalogue or routine name.
  DI_STATUS_UNKNOWN_NAME = 7,
  // The caller's buffer is too small; the required length was written.
  DI_STATUS_BUFFER_TOO_SMALL = 8,
  // Any other failure, including a caught panic.
  DI_STATUS_INTERNAL = 9,
} DiStatus;

// Decision on a single distance ideal.
typedef enum DiDecision {
  DI_DECISION_TRIVIAL = 0,
  DI_DECISION_NON_TRIVIAL = 1,
  DI_DECISION_INCONCLUSIVE = 2,
} DiDecision;

// Opaque graph handle.
typedef struct DiGraph DiGraph;

// Trivial-ideal counts of a graph.
typedef struct DiPhi {
  // Φ: length of the trivial prefix of the distance ideals (a lower bound
  // when `complete` is false).
  size_t phi_ideals;
  // φ: number of invariant factors of the distance matrix equal to 1.
  size_t phi_snf;
  // False when a Gröbner budget ran out before the ladder was settled.
  bool complete;
} DiPhi;

// Message describing the last failure on this thread (empty after a
// success). The pointer stays valid until the next call on this thread.
const char *di_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *di_version(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void di_string_free(char *s);

// Parses one graph6 string.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum DiStatus di_graph_from_graph6(const char *text, struct DiGraph **out);

// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
// consecutive endpoints.
//
// # Safety
// `edges` must point to `2 * m` readable values (it may be NULL when
// `m == 0`) and `out` must be writable.
enum DiStatus di_graph_from_edges(size_t n, const size_t *edges, size_t m, struct DiGraph **out);

// A named graph of the built-in catalogue (for example "bull" or
// "G_{6,7}").
//
// # Safety
// `name` must be a NUL-terminated string and `out` writable.
enum DiStatus di_graph_from_atlas(const char *name, struct DiGraph **out);

// Releases a graph handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle from this library that was not yet freed.
void di_graph_free(struct DiGraph *g);

// Number of vertices.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_graph_order(const struct DiGraph *g, size_t *out);

// The graph6 encoding; free the result with [`di_string_free`].
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_graph_to_graph6(const struct DiGraph *g, char **out);

// Writes the `n x n` distance matrix row by row into `buf`. When `len` is
// below `n * n`, nothing is written, `*required` receives `n * n` and the
// status is [`DiStatus::BufferTooSmall`].
//
// # Safety
// `g` must be a live handle, `buf` must hold `len` writable values and
// `required` must be NULL or writable.
enum DiStatus di_distance_matrix(const struct DiGraph *g,
                                 int64_t *buf,
                                 size_t len,
                                 size_t *required);

// Invariant factors of the distance matrix as a JSON array of decimal
// strings, zeros included; free the result with [`di_string_free`].
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_smith_normal_form_json(const struct DiGraph *g, char **out);

// Φ and φ of a connected graph. `budget` bounds each Gröbner completion
// (0 selects the default); `rational` works over ℚ instead of ℤ.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_phi(const struct DiGraph *g, uint64_t budget, bool rational, struct DiPhi *out);

// Decision on the `i`-th distance ideal over ℤ (`rational` false) or ℚ.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_ideal_triviality(const struct DiGraph *g,
                                  size_t i,
                                  uint64_t budget,
                                  bool rational,
                                  enum DiDecision *out);

// The verdict record of the `i`-th distance ideal over ℤ as JSON (graph,
// i, decision, certificate kind and data, elapsed time).
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_ideal_verdict_json(const struct DiGraph *g, size_t i, uint64_t budget, char **out);

// Whether Φ ≤ k over ℤ. Undecided cases fail with
// [`DiStatus::BudgetExceeded`].
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_lambda_membership(const struct DiGraph *g, size_t k, uint64_t budget, bool *out);

// Forbidden-subgraph scan with the trivial-ideal ladder, as JSON.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum DiStatus di_scan_json(const struct DiGraph *g, uint64_t budget, char **out);

// Runs one verification routine by identifier (for example "bull" or
// "G67") and returns its report as JSON. `*passed` receives whether every
// check passed.
//
// # Safety
// `id` must be a NUL-terminated string, `out` writable and `passed` NULL
// or writable.
enum DiStatus di_verify_lemma_json(const char *id, uint64_t budget, bool *passed, char **out);

#endif  /* DISTIDEAL_H */
