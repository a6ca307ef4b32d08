/* C interface for the doublepoint divisor-class calculator. */

#ifndef DOUBLEPOINT_H
#define DOUBLEPOINT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every C-ABI call.
 */
typedef enum DpStatus {
  /**
   * The call succeeded.
   */
  DP_STATUS_OK = 0,
  /**
   * Arguments were malformed or out of range.
   */
  DP_STATUS_INVALID_INPUT = 1,
  /**
   * An internal consistency check against a known closed form failed.
   */
  DP_STATUS_VERIFICATION_FAILED = 2,
  /**
   * The engine itself misbehaved.
   */
  DP_STATUS_INTERNAL_ERROR = 3,
  /**
   * A required pointer argument was NULL.
   */
  DP_STATUS_NULL_ARGUMENT = 4,
  /**
   * A panic was caught at the boundary.
   */
  DP_STATUS_PANIC = 5,
} DpStatus;

/**
 * Opaque handle to a computed divisor class.
 */
typedef struct DpClass DpClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compute the divisor class at parameter `s` (genus `3s`) and return an
 * opaque handle through `out`.
 *
 * # Safety
 * `out` must be NULL or point to writable storage for one pointer.
 */
enum DpStatus dp_class_new(uint32_t s, struct DpClass **out);

/**
 * Release a handle returned by `dp_class_new`. NULL is ignored.
 *
 * # Safety
 * `handle` must be NULL or a pointer returned by `dp_class_new` that has
 * not been freed yet.
 */
void dp_class_free(struct DpClass *handle);

/**
 * Genus of the class held by the handle.
 *
 * # Safety
 * `handle` must be a live pointer from `dp_class_new`.
 */
enum DpStatus dp_class_genus(const struct DpClass *handle, uint32_t *out);

/**
 * Coefficient of the Hodge class, as a rational string.
 *
 * # Safety
 * `handle` must be a live pointer from `dp_class_new`.
 */
enum DpStatus dp_class_lambda(const struct DpClass *handle, char **out);

/**
 * Coefficient of the cotangent class at the marked point.
 *
 * # Safety
 * `handle` must be a live pointer from `dp_class_new`.
 */
enum DpStatus dp_class_psi(const struct DpClass *handle, char **out);

/**
 * Coefficient of the boundary class `delta_i`. For interior coefficients
 * the computation does not determine (genus other than six), `*out` is set
 * to NULL and the call still succeeds.
 *
 * # Safety
 * `handle` must be a live pointer from `dp_class_new`.
 */
enum DpStatus dp_class_delta(const struct DpClass *handle, uint32_t index, char **out);

/**
 * Full JSON report for the class held by the handle (same schema as the
 * command-line `class --json` output).
 *
 * # Safety
 * `handle` must be a live pointer from `dp_class_new`.
 */
enum DpStatus dp_class_json(const struct DpClass *handle, char **out);

/**
 * Release a string allocated by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a pointer previously returned through one of the
 * string out-parameters, not yet freed.
 */
void dp_string_free(char *s);

/**
 * Castelnuovo count of series of type `(r, d)` on a general genus-`g`
 * curve, as a rational string.
 *
 * # Safety
 * `out` must be NULL or point to writable storage for one pointer.
 */
enum DpStatus dp_castelnuovo(int64_t g, int64_t r, int64_t d, char **out);

/**
 * Count of series with the prescribed ramification sequence
 * `alpha[0..alpha_len]` at a general point.
 *
 * # Safety
 * `alpha` must point to `alpha_len` readable `int64_t` values.
 */
enum DpStatus dp_count_ramified(int64_t g,
                                int64_t r,
                                int64_t d,
                                const int64_t *alpha,
                                size_t alpha_len,
                                char **out);

/**
 * Pluecker count of double points of a degree-`d` plane model of a
 * genus-`g` curve.
 *
 * # Safety
 * `out` must be NULL or point to writable storage for one `int64_t`.
 */
enum DpStatus dp_plucker_double_points(int64_t g, int64_t d, int64_t *out);

/**
 * Degree of the rank-one degeneracy locus on the triple product, as a
 * rational string; runs the full symbolic pipeline with all of its
 * internal golden checks.
 *
 * # Safety
 * `out` must be NULL or point to writable storage for one pointer.
 */
enum DpStatus dp_y_locus_degree(uint32_t s, char **out);

/**
 * Run the complete verification suite for every parameter from 1 to
 * `max_s`. Returns `Ok` exactly when every check passes.
 */
enum DpStatus dp_verify(uint32_t max_s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DOUBLEPOINT_H */
