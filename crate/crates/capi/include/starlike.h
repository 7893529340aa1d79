#ifndef STARLIKE_H
#define STARLIKE_H

/* Generated by cbindgen from the starlike-capi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Target region selector.
 */
typedef enum {
  SlRegion_HalfPlane = 0,
  SlRegion_Sector = 1,
  SlRegion_Cardioid = 2,
} SlRegion;

/**
 * Call outcome.
 */
typedef enum {
  SlStatus_Ok = 0,
  SlStatus_NullPointer = 1,
  SlStatus_InvalidArgument = 2,
  SlStatus_PoleParameter = 3,
  SlStatus_NotApplicable = 4,
  SlStatus_EvaluationFailed = 5,
} SlStatus;

/**
 * Transform selector for [`sl_map_transform`]; `k` and `beta` are read only
 * by the last two kinds.
 */
typedef enum {
  SlTransform_ZFprimeOverF = 0,
  SlTransform_Fprime = 1,
  SlTransform_Z2FprimeOverF2 = 2,
  SlTransform_OnePlusBeta = 3,
  SlTransform_PPlusBeta = 4,
} SlTransform;

/**
 * Verdict of a subordination sweep.
 */
typedef enum {
  SlVerdict_Holds = 0,
  SlVerdict_Counterexample = 1,
  SlVerdict_Inconclusive = 2,
} SlVerdict;

/**
 * Opaque analytic-map handle.
 */
typedef struct SlMap SlMap;

/**
 * Flattened subordination evidence record.
 */
typedef struct {
  double min_margin;
  double witness_z_re;
  double witness_z_im;
  double witness_w_re;
  double witness_w_im;
  double tail_bound;
  uintptr_t samples_per_circle;
  SlVerdict verdict;
} SlReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Rising factorial `(lambda)_n`.
 */
double sl_pochhammer(double lambda, uint32_t n);

/**
 * Kummer function value at `z`; also reports the number of series terms.
 *
 * # Safety
 * Output pointers must be valid for writes or null (null fails the call).
 */
SlStatus sl_kummer_eval(double a,
                        double c,
                        double z_re,
                        double z_im,
                        double *out_re,
                        double *out_im,
                        uint32_t *out_terms);

/**
 * Generalized normalized Bessel function value at `z`.
 *
 * # Safety
 * Same pointer contract as [`sl_kummer_eval`].
 */
SlStatus sl_bessel_eval(double p,
                        double b,
                        double c,
                        double z_re,
                        double z_im,
                        double *out_re,
                        double *out_im,
                        uint32_t *out_terms);

/**
 * Infimum of admissible sector orders for the Kummer function.
 *
 * # Safety
 * `out` must be valid for a write.
 */
SlStatus sl_kummer_alpha_min(double a, double c, double *out);

/**
 * Infimum of admissible sector orders for the Bessel function.
 *
 * # Safety
 * `out` must be valid for a write.
 */
SlStatus sl_bessel_alpha_min(double p, double b, double c, double *out);

/**
 * Signed sector margin of `w` (radians, positive inside).
 *
 * # Safety
 * `out` must be valid for a write.
 */
SlStatus sl_sector_margin(double w_re, double w_im, double alpha, double *out);

/**
 * Signed cardioid margin of `w` (positive inside).
 */
double sl_car_margin(double w_re, double w_im);

/**
 * Implicit cardioid quartic at `w` (negative inside).
 */
double sl_car_quartic(double w_re, double w_im);

/**
 * Threshold of the `1 + beta z p'/p` cardioid premise: closed form, brute
 * bisection over `tgrid` boundary parameters and their gap.
 *
 * # Safety
 * Output pointers must be valid for writes or null.
 */
SlStatus sl_threshold_one_plus_k1(double alpha,
                                  uint32_t tgrid,
                                  double *out_analytic,
                                  double *out_brute,
                                  double *out_gap);

/**
 * Sup-norm residual of the Kummer series under its own equation.
 *
 * # Safety
 * `out` must be valid for a write.
 */
SlStatus sl_ode_residual_kummer(double a, double c, uint32_t order, double *out);

/**
 * Sup-norm residual of the Bessel series under its own equation.
 *
 * # Safety
 * `out` must be valid for a write.
 */
SlStatus sl_ode_residual_bessel(double p, double b, double c, uint32_t order, double *out);

/**
 * Map from interleaved `[re0, im0, re1, im1, ...]` Taylor coefficients.
 * Returns null when the input is empty, null or non-finite.
 *
 * # Safety
 * `reim` must point to `2 * n_pairs` doubles.
 */
SlMap *sl_map_from_coeffs(const double *reim, uintptr_t n_pairs);

/**
 * Kummer function as a map handle (null on pole parameters).
 */
SlMap *sl_map_kummer(double a, double c);

/**
 * Bessel function as a map handle (null on pole parameters).
 */
SlMap *sl_map_bessel(double p, double b, double c);

/**
 * The sector extremal `((1+z)/(1-z))^alpha` as a map handle.
 */
SlMap *sl_map_sector_extremal(double alpha);

/**
 * Named example functions: "f1" or "f2".
 *
 * # Safety
 * `name` must be a valid NUL-terminated string or null.
 */
SlMap *sl_map_preset(const char *name);

/**
 * New handle holding the transformed map (null on error; the input handle
 * stays valid and owned by the caller).
 *
 * # Safety
 * `map` must be a live handle from this library.
 */
SlMap *sl_map_transform(const SlMap *map, SlTransform kind, uint32_t k, double beta);

/**
 * Evaluate a map handle at a point.
 *
 * # Safety
 * `map` must be a live handle; output pointers valid for writes.
 */
SlStatus sl_map_eval(const SlMap *map, double z_re, double z_im, double *out_re, double *out_im);

/**
 * Sample the map on the radii ladder against the selected region and fill
 * the report. `alpha` is read only for `SlRegion::Sector`.
 *
 * # Safety
 * `map` must be a live handle, `radii` must point to `n_radii` doubles and
 * `out` must be valid for a write.
 */
SlStatus sl_check_subordination(const SlMap *map,
                                SlRegion region,
                                double alpha,
                                const double *radii,
                                uintptr_t n_radii,
                                uintptr_t samples,
                                SlReport *out);

/**
 * Release a map handle (null is a no-op).
 *
 * # Safety
 * `map` must be a handle from this library, not yet freed.
 */
void sl_map_free(SlMap *map);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STARLIKE_H */
