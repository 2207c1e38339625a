#ifndef TORUS_VASSILIEV_H
#define TORUS_VASSILIEV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TvFamily {
  TV_FAMILY_SU_N = 0,
  TV_FAMILY_SO_N = 1,
  TV_FAMILY_SU2 = 2,
  TV_FAMILY_SU_NX_SU2 = 3,
} TvFamily;

typedef enum TvKind {
  TV_KIND_ALPHA_TILDE = 0,
  TV_KIND_ALPHA = 1,
  TV_KIND_BETA = 2,
} TvKind;

typedef enum TvMethod {
  TV_METHOD_CLOSED_FORM = 0,
  TV_METHOD_SOLVE = 1,
} TvMethod;

// Result codes. `TV_STATUS_NOT_A_KNOT` and `TV_STATUS_UNSUPPORTED` match
// the command-line exit codes.
typedef enum TvStatus {
  TV_STATUS_OK = 0,
  // Solver or numeric failure (rank deficiency, inconsistency, ...).
  TV_STATUS_COMPUTATION = 1,
  TV_STATUS_NOT_A_KNOT = 2,
  // Order out of range, invalid group parameters, guard too small.
  TV_STATUS_UNSUPPORTED = 3,
  TV_STATUS_NULL_ARGUMENT = 4,
  // Requested slot or degree is not present in the handle.
  TV_STATUS_OUT_OF_RANGE = 5,
  // A panic was caught at the boundary.
  TV_STATUS_INTERNAL = 6,
} TvStatus;

// Opaque truncated series `x^0..=x^order`.
typedef struct TvSeries TvSeries;

// Opaque table of invariants for one knot.
typedef struct TvTable TvTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *tv_version(void);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *tv_last_error(void);

// Computes one invariant table for the torus knot `(n, m)` through
// `order` (at most 6). `TV_METHOD_SOLVE` runs the series solver,
// `TV_METHOD_CLOSED_FORM` evaluates the closed forms.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum TvStatus tv_invariants(int64_t n,
                            int64_t m,
                            enum TvKind kind,
                            enum TvMethod method,
                            uint32_t order,
                            struct TvTable **out);

// Number of entries in the table.
//
// # Safety
// `table` must be null or a handle from [`tv_invariants`] not yet freed.
size_t tv_table_len(const struct TvTable *table);

// Slot `(order, index)` of the `position`-th entry, in ascending order.
//
// # Safety
// `table` must be a live handle; `order` and `index` must be writable.
enum TvStatus tv_table_slot(const struct TvTable *table,
                            size_t position,
                            uint8_t *order,
                            uint8_t *index);

// Value at `(order, index)` as a newly allocated fraction string.
//
// # Safety
// `table` must be a live handle; `out` must be writable.
enum TvStatus tv_table_get(const struct TvTable *table, uint8_t order, uint8_t index, char **out);

// Releases a table handle. Null is ignored.
//
// # Safety
// `table` must be null or a handle not yet freed.
void tv_table_free(struct TvTable *table);

// Expands the invariant of `(n, m)` for a group, normalized unless
// `unnormalized` is set. `big_n` is read for SU(N), SO(N) and the
// product, `j` for SU(2) and the product.
//
// # Safety
// `out` must be writable.
enum TvStatus tv_expand(enum TvFamily family,
                        int64_t big_n,
                        int64_t j,
                        int64_t n,
                        int64_t m,
                        uint32_t order,
                        bool unnormalized,
                        struct TvSeries **out);

// Highest degree held by the series, or -1 for null.
//
// # Safety
// `series` must be null or a live handle.
int64_t tv_series_order(const struct TvSeries *series);

// Coefficient of `x^degree` as a newly allocated fraction string.
//
// # Safety
// `series` must be a live handle; `out` must be writable.
enum TvStatus tv_series_coefficient(const struct TvSeries *series, uint32_t degree, char **out);

// # Safety
// `series` must be null or a handle not yet freed.
void tv_series_free(struct TvSeries *series);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `text` must be null or a string from this library not yet freed.
void tv_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORUS_VASSILIEV_H */
