#ifndef AFFINE_SCHERK_H
#define AFFINE_SCHERK_H

/* Generated by cbindgen from affine-scherk-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes of every fallible call.
 */
typedef enum AscherkStatus {
  ASCHERK_STATUS_OK = 0,
  ASCHERK_STATUS_DOMAIN_ERROR = 1,
  ASCHERK_STATUS_SPACELIKE_VIOLATION = 2,
  ASCHERK_STATUS_POLE_PROXIMITY = 3,
  ASCHERK_STATUS_TOLERANCE_NOT_MET = 4,
  ASCHERK_STATUS_SINGULAR_FACTOR = 5,
  ASCHERK_STATUS_IMAGINARY_RESIDUE = 6,
  ASCHERK_STATUS_GUARD_VIOLATION = 7,
  ASCHERK_STATUS_ZERO_DENOMINATOR = 8,
  ASCHERK_STATUS_SCALAR_DOMAIN = 9,
  ASCHERK_STATUS_EMPTY_MESH = 10,
  ASCHERK_STATUS_IO_ERROR = 11,
  ASCHERK_STATUS_INVALID_ARGUMENT = 12,
  ASCHERK_STATUS_NULL_POINTER = 13,
} AscherkStatus;

/**
 * Surface family selector.
 */
typedef enum AscherkSignature {
  ASCHERK_SIGNATURE_EUCLIDEAN = 0,
  ASCHERK_SIGNATURE_LORENTZ = 1,
  ASCHERK_SIGNATURE_BORN_INFELD_WICK = 2,
} AscherkSignature;

/**
 * Opaque logarithmic-distribution table. Construct with
 * `ascherk_pmf_new`, inspect with the accessors, release with
 * `ascherk_pmf_free`.
 */
typedef struct AscherkPmf AscherkPmf;

/**
 * A complex number as a re/im pair.
 */
typedef struct AscherkComplex {
  double re;
  double im;
} AscherkComplex;

/**
 * Second-order jet of the height function.
 */
typedef struct AscherkJet2 {
  double phi;
  double phi_x;
  double phi_y;
  double phi_xx;
  double phi_xy;
  double phi_yy;
} AscherkJet2;

/**
 * Quadrature tolerances and budgets.
 */
typedef struct AscherkQuadConfig {
  double abs_tol;
  double rel_tol;
  size_t max_subdivisions;
  double pole_clearance;
} AscherkQuadConfig;

/**
 * Chart point produced by the contour integration.
 */
typedef struct AscherkWePoint {
  struct AscherkComplex xi;
  double x;
  double y;
  double phi;
  double est_error;
} AscherkWePoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static C string.
 */
const char *ascherk_version(void);

/**
 * Static human-readable description of a status code.
 */
const char *ascherk_status_message(enum AscherkStatus status);

/**
 * Closed-form height. Real signatures only; the wick surface is complex,
 * see `ascherk_wick_height`.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_height(enum AscherkSignature signature,
                                  double a,
                                  double x,
                                  double y,
                                  double *out);

/**
 * Complex wick-rotated height with the principal-branch diagnostic.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_wick_height(double a,
                                       double x,
                                       double y,
                                       struct AscherkComplex *out,
                                       bool *branch_warning);

/**
 * Exact closed-form jet (no finite differences).
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_analytic_jet(enum AscherkSignature signature,
                                        double a,
                                        double x,
                                        double y,
                                        struct AscherkJet2 *out);

/**
 * Minimal-surface residual of a jet; NaN on a null pointer.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
double ascherk_minimal_residual(const struct AscherkJet2 *jet);

/**
 * Maximal-surface residual; fails unless the jet is spacelike.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_maximal_residual(const struct AscherkJet2 *jet, double *out);

/**
 * Born-Infeld soliton residual of a jet; NaN on a null pointer.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
double ascherk_born_infeld_residual(const struct AscherkJet2 *jet);

/**
 * Domain membership with an explicit safety margin.
 */
bool ascherk_in_domain(enum AscherkSignature signature, double a, double x, double y, double delta);

/**
 * The corrected meromorphic Weierstrass data R(w).
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_weierstrass_r(enum AscherkSignature signature,
                                         double a,
                                         struct AscherkComplex w,
                                         struct AscherkComplex *out);

/**
 * The four unit-modulus poles of R; `out` must hold four entries.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_umbilic_poles(enum AscherkSignature signature,
                                         double a,
                                         struct AscherkComplex *out);

/**
 * Default quadrature configuration (1e-10 tolerances, 2000 subdivisions,
 * 1e-2 pole clearance).
 */
struct AscherkQuadConfig ascherk_quad_config_default(void);

/**
 * Integrate the Weierstrass-Enneper representation along `[0, xi]`.
 * A null config selects the defaults.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_we_integrate(enum AscherkSignature signature,
                                        double a,
                                        struct AscherkComplex xi,
                                        const struct AscherkQuadConfig *cfg,
                                        struct AscherkWePoint *out);

/**
 * Euclidean Ramanujan route; `tail` (optional) receives the truncation
 * estimate.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_affine_ramanujan(double a,
                                            double x,
                                            double y,
                                            size_t terms,
                                            double *value,
                                            double *tail);

/**
 * Lorentz Ramanujan route.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_lorentz_ramanujan(double a,
                                             double x,
                                             double y,
                                             size_t terms,
                                             double *value,
                                             double *tail);

/**
 * Truncated Dirichlet series P(s, p).
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_dirichlet_p(double s, double p, size_t terms, double *out);

/**
 * Truncated Dirichlet series T(s, b).
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_dirichlet_t(double s, double b, size_t terms, double *out);

/**
 * Height via the Dirichlet expansion; `clamp_guard` selects the shrinking
 * guard policy instead of strict rejection.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_height_via_dirichlet(double a,
                                                double x,
                                                double y,
                                                size_t outer_terms,
                                                size_t inner_terms,
                                                bool clamp_guard,
                                                double *value,
                                                double *tail);

/**
 * Forward hodographic map (gradient variables to chart pair).
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_hodograph_forward(enum AscherkSignature signature,
                                             struct AscherkComplex u,
                                             struct AscherkComplex v,
                                             struct AscherkComplex *first,
                                             struct AscherkComplex *second);

/**
 * Inverse hodographic map.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_hodograph_inverse(enum AscherkSignature signature,
                                             struct AscherkComplex xi,
                                             struct AscherkComplex xibar,
                                             struct AscherkComplex *u,
                                             struct AscherkComplex *v);

/**
 * Build a PMF table. `scalar_mode = false` selects the distributive
 * (split) reading. On success the handle is owned by the caller.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
enum AscherkStatus ascherk_pmf_new(double a,
                                   double x,
                                   double y,
                                   size_t n,
                                   size_t j_max,
                                   bool scalar_mode,
                                   struct AscherkPmf **out);

/**
 * Number of tabulated masses.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
size_t ascherk_pmf_len(const struct AscherkPmf *pmf);

/**
 * Mass `f(j)` for 1-based `j`; NaN out of range.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
double ascherk_pmf_value(const struct AscherkPmf *pmf, size_t j);

/**
 * Total tabulated mass (approaches 1 as the table grows).
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
double ascherk_pmf_cumulative(const struct AscherkPmf *pmf);

/**
 * Geometric bound on the truncated mass.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
double ascherk_pmf_tail_bound(const struct AscherkPmf *pmf);

/**
 * Sign diagnostic: true iff every tabulated mass is non-negative.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
bool ascherk_pmf_nonneg(const struct AscherkPmf *pmf);

/**
 * Release a PMF handle. Null is a no-op; a handle must not be freed twice.
 *
 * # Safety
 * Pointer arguments must be valid for reads/writes of their type for
 * the duration of the call. Null output pointers are rejected with
 * `NullPointer`; null inputs yield NaN/no-op where documented.
 */
void ascherk_pmf_free(struct AscherkPmf *pmf);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFINE_SCHERK_H */
