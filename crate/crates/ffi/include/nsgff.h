#ifndef NSGFF_H
#define NSGFF_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NsgffStatus {
  NSGFF_STATUS_OK = 0,
  NSGFF_STATUS_NULL_POINTER = 1,
  NSGFF_STATUS_EMPTY_GENERATORS = 2,
  NSGFF_STATUS_NON_POSITIVE_GENERATOR = 3,
  NSGFF_STATUS_GCD_NOT_ONE = 4,
  NSGFF_STATUS_INPUT_TOO_LARGE = 5,
  NSGFF_STATUS_BUFFER_TOO_SMALL = 6,
  NSGFF_STATUS_BAD_PARAMETERS = 7,
  NSGFF_STATUS_OUT_OF_TABLE = 8,
  NSGFF_STATUS_BUDGET_EXCEEDED = 9,
  NSGFF_STATUS_INVALID_ROUTE = 10,
  NSGFF_STATUS_INTERNAL = 99,
} NsgffStatus;

typedef enum NsgffRoute {
  NSGFF_ROUTE_DEFINITION = 0,
  NSGFF_ROUTE_SQUARE = 1,
  NSGFF_ROUTE_SUMSET = 2,
} NsgffRoute;

/**
 * Opaque semigroup handle.
 */
typedef struct NsgffSemigroup NsgffSemigroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a semigroup from `len` generators.
 *
 * # Safety
 * `gens` must point to `len` readable values and `out` must be writable.
 */
enum NsgffStatus nsgff_semigroup_new(const int64_t *gens, size_t len, struct NsgffSemigroup **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` must come from [`nsgff_semigroup_new`] and not have been freed.
 */
void nsgff_semigroup_free(struct NsgffSemigroup *h);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_frobenius(const struct NsgffSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_multiplicity(const struct NsgffSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_embedding_dimension(const struct NsgffSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_type(const struct NsgffSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_genus(const struct NsgffSemigroup *h, int64_t *out);

/**
 * Copies the minimal generators into `buf`. `*len` receives the count
 * even when the status is `BufferTooSmall`.
 *
 * # Safety
 * `buf` must hold `cap` writable values and `len` be writable.
 */
enum NsgffStatus nsgff_semigroup_min_gens(const struct NsgffSemigroup *h,
                                          int64_t *buf,
                                          size_t cap,
                                          size_t *len);

/**
 * Copies the pseudo-Frobenius numbers, ascending, into `buf`.
 *
 * # Safety
 * As for [`nsgff_semigroup_min_gens`].
 */
enum NsgffStatus nsgff_semigroup_pseudo_frobenius(const struct NsgffSemigroup *h,
                                                  int64_t *buf,
                                                  size_t cap,
                                                  size_t *len);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_contains(const struct NsgffSemigroup *h, int64_t z, bool *out);

/**
 * Far-flung Gorenstein test along one of the three equivalent routes;
 * `route` is an [`NsgffRoute`] value.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_is_far_flung(const struct NsgffSemigroup *h,
                                              int32_t route,
                                              bool *out);

/**
 * Full report as a JSON string, to be released with [`nsgff_string_free`].
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum NsgffStatus nsgff_semigroup_report_json(const struct NsgffSemigroup *h, char **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void nsgff_string_free(char *s);

/**
 * Exact Rohrbach value for `r` elements within `budget` search nodes.
 * On `BudgetExceeded`, `*value` holds the best value found so far.
 * The witness set is copied into `witness` when it is non-null.
 *
 * # Safety
 * `value` must be writable; `witness` must hold `cap` values and
 * `witness_len` be writable when `witness` is non-null.
 */
enum NsgffStatus nsgff_rohrbach_max(size_t r,
                                    uint64_t budget,
                                    int64_t *value,
                                    int64_t *witness,
                                    size_t cap,
                                    size_t *witness_len);

/**
 * Tabulated Rohrbach value, `1 <= r <= 25`.
 *
 * # Safety
 * `out` must be writable.
 */
enum NsgffStatus nsgff_rohrbach_table(size_t r, int64_t *out);

/**
 * Static description of an [`NsgffStatus`] value.
 */
const char *nsgff_status_message(int32_t status);

/**
 * Message for the last failure on this thread; empty after success.
 * Valid until the next call into the library from the same thread.
 */
const char *nsgff_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NSGFF_H */
