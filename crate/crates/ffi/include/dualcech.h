#ifndef DUALCECH_H
#define DUALCECH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_POINTER = 1,
  DC_STATUS_INVALID_METRIC = 2,
  DC_STATUS_INVALID_MEASURE = 3,
  DC_STATUS_INVALID_ARGUMENT = 4,
  DC_STATUS_MISSING_COORDINATES = 5,
  DC_STATUS_DEGENERATE_CONFIGURATION = 6,
  DC_STATUS_SUPPORT_TOO_LARGE = 7,
  DC_STATUS_PANIC = 8,
} DcStatus;

/**
 * Opaque bifiltered complex.
 */
typedef struct DcBifiltration DcBifiltration;

/**
 * Opaque discrete measure.
 */
typedef struct DcMeasure DcMeasure;

/**
 * Opaque finite metric space.
 */
typedef struct DcSpace DcSpace;

/**
 * Message of the last failed call on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *dc_last_error_message(void);

/**
 * Metric space from a row-major `n * n` distance matrix.
 *
 * # Safety
 * `dist` must point to `n * n` readable doubles; `out` must be writable.
 */
DcStatus dc_space_from_matrix(const double *dist, size_t n, DcSpace **out);

/**
 * Euclidean space on `n` planar points given as interleaved `x, y` pairs.
 *
 * # Safety
 * `xy` must point to `2 * n` readable doubles; `out` must be writable.
 */
DcStatus dc_space_from_points(const double *xy, size_t n, DcSpace **out);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `space` must be null or a live handle.
 */
size_t dc_space_len(const DcSpace *space);

/**
 * # Safety
 * `space` must be null or a handle not yet freed.
 */
void dc_space_free(DcSpace *space);

/**
 * Discrete measure from `n` nonnegative weights.
 *
 * # Safety
 * `weights` must point to `n` readable doubles; `out` must be writable.
 */
DcStatus dc_measure_new(const double *weights, size_t n, DcMeasure **out);

/**
 * # Safety
 * `mu` must be null or a handle not yet freed.
 */
void dc_measure_free(DcMeasure *mu);

/**
 * Dual degree Čech bifiltration with witnesses in the support of `mu`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
DcStatus dc_intrinsic_dc(const DcSpace *space,
                         const DcMeasure *mu,
                         size_t dim_cap,
                         DcBifiltration **out);

/**
 * Dual degree Čech bifiltration with witnesses anywhere in the finite space.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
DcStatus dc_ambient_dc_finite(const DcSpace *space,
                              const DcMeasure *mu,
                              size_t dim_cap,
                              DcBifiltration **out);

/**
 * Dual degree Čech bifiltration with witnesses anywhere in the plane.
 * The space must have been built from points.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
DcStatus dc_ambient_dc_planar(const DcSpace *space,
                              const DcMeasure *mu,
                              size_t dim_cap,
                              DcBifiltration **out);

/**
 * Number of simplices with a staircase, or 0 for a null handle.
 *
 * # Safety
 * `k` must be null or a live handle.
 */
size_t dc_bifiltration_len(const DcBifiltration *k);

/**
 * Whether the simplex on `vertices` (any order) is present at `(m, r)`.
 *
 * # Safety
 * `vertices` must point to `len` readable values; `out` must be writable.
 */
DcStatus dc_bifiltration_present(const DcBifiltration *k,
                                 const size_t *vertices,
                                 size_t len,
                                 double m,
                                 double r,
                                 bool *out);

/**
 * Betti numbers over GF(2) in degrees `0..out_len` of the complex at `(m, r)`.
 * Degrees at or above the dimension cap are not meaningful.
 *
 * # Safety
 * `out` must point to `out_len` writable values.
 */
DcStatus dc_betti_at(const DcBifiltration *k, double m, double r, size_t *out, size_t out_len);

/**
 * # Safety
 * `k` must be null or a handle not yet freed.
 */
void dc_bifiltration_free(DcBifiltration *k);

/**
 * Exact Prohorov distance of two measures on the same space.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
DcStatus dc_prohorov_distance(const DcSpace *space,
                              const DcMeasure *mu0,
                              const DcMeasure *mu1,
                              double *out);

#endif  /* DUALCECH_H */
