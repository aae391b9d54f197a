#ifndef LDYN_H
#define LDYN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum LdynStatus {
  LDYN_STATUS_OK = 0,
  LDYN_STATUS_NULL_POINTER = 1,
  LDYN_STATUS_INVALID_UTF8 = 2,
  LDYN_STATUS_PARSE = 3,
  LDYN_STATUS_PRECONDITION = 4,
  LDYN_STATUS_CAP_EXCEEDED = 5,
  LDYN_STATUS_BUFFER_TOO_SMALL = 6,
  LDYN_STATUS_PANIC = 7,
} LdynStatus;

/**
 * Opaque graph handle.
 */
typedef struct LdynGraph LdynGraph;

/**
 * Opaque worst-case witness: a value, its threshold assignment and a minimum dynamo.
 */
typedef struct LdynWitness LdynWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *ldyn_last_error_message(void);

/**
 * Parses the edge-list format (`n m` header, then `m` lines `u v`).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LdynStatus ldyn_graph_parse(const char *text, struct LdynGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from [`ldyn_graph_parse`] not yet freed.
 */
void ldyn_graph_free(struct LdynGraph *g);

/**
 * Vertex count, or 0 for a NULL handle.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t ldyn_graph_vertex_count(const struct LdynGraph *g);

/**
 * Edge count, or 0 for a NULL handle.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t ldyn_graph_edge_count(const struct LdynGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum LdynStatus ldyn_graph_is_forest(const struct LdynGraph *g, bool *out);

/**
 * Whether `seed` activates every vertex under thresholds `tau`.
 *
 * # Safety
 * `tau` must point to `tau_len` values and `seed` to `seed_len` values.
 */
enum LdynStatus ldyn_is_dynamo(const struct LdynGraph *g,
                               const uint32_t *tau,
                               size_t tau_len,
                               const size_t *seed,
                               size_t seed_len,
                               bool *out);

/**
 * Exhaustive minimum dynamo. Writes its size to `out_size` and its vertices
 * to `out_set` (capacity `set_capacity`; the graph's vertex count always suffices).
 *
 * # Safety
 * Pointers must be valid for the stated lengths.
 */
enum LdynStatus ldyn_min_dynamo(const struct LdynGraph *g,
                                const uint32_t *tau,
                                size_t tau_len,
                                size_t cap,
                                size_t *out_set,
                                size_t set_capacity,
                                size_t *out_size);

/**
 * Degree-sequence bound at average threshold `t_num / t_den`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum LdynStatus ldyn_ksz_bound(const struct LdynGraph *g,
                               int64_t t_num,
                               int64_t t_den,
                               size_t *out);

/**
 * Worst-case minimum dynamo of a forest at average threshold `t_num / t_den`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum LdynStatus ldyn_forest_solve(const struct LdynGraph *g,
                                  int64_t t_num,
                                  int64_t t_den,
                                  struct LdynWitness **out);

/**
 * Exhaustive worst-case minimum dynamo (at most `cap` vertices).
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum LdynStatus ldyn_brute_solve(const struct LdynGraph *g,
                                 int64_t t_num,
                                 int64_t t_den,
                                 bool allow_self_opinioned,
                                 size_t cap,
                                 struct LdynWitness **out);

/**
 * # Safety
 * `w` must be NULL or a live witness handle.
 */
size_t ldyn_witness_value(const struct LdynWitness *w);

/**
 * Copies the witness thresholds into `buf`; `out_len` receives the length
 * even when the buffer is too small.
 *
 * # Safety
 * `buf` must hold `capacity` values and `out_len` must be valid.
 */
enum LdynStatus ldyn_witness_tau(const struct LdynWitness *w,
                                 uint32_t *buf,
                                 size_t capacity,
                                 size_t *out_len);

/**
 * Copies the witness dynamo into `buf`.
 *
 * # Safety
 * `buf` must hold `capacity` values and `out_len` must be valid.
 */
enum LdynStatus ldyn_witness_dynamo(const struct LdynWitness *w,
                                    size_t *buf,
                                    size_t capacity,
                                    size_t *out_len);

/**
 * # Safety
 * `w` must be NULL or a live witness handle.
 */
void ldyn_witness_free(struct LdynWitness *w);

/**
 * Runs the command-line front end on `argv` (without the program name) and
 * returns its JSON document in `out_json`, to be released with
 * [`ldyn_string_free`]. `out_status` receives the CLI exit status.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings.
 */
enum LdynStatus ldyn_run(const char *const *argv,
                         size_t argc,
                         char **out_json,
                         int32_t *out_status);

/**
 * # Safety
 * `s` must be NULL or a string returned by [`ldyn_run`].
 */
void ldyn_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LDYN_H */
