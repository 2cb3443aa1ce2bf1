/* C interface to libmvf. Every call that can fail returns an mvf_status and
 * records a message retrievable with mvf_last_error(ctx). Strings returned
 * through char** are heap allocated; release them with mvf_string_free. */
#ifndef MVF_MVF_H
#define MVF_MVF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MVF_BUILDING_LIBRARY)
#    define MVF_API __declspec(dllexport)
#  else
#    define MVF_API __declspec(dllimport)
#  endif
#else
#  define MVF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvf_status {
  MVF_OK = 0,
  MVF_E_INVALID_ARGUMENT = 1,
  MVF_E_PARSE = 2,
  MVF_E_CLASS_VIOLATION = 3,
  MVF_E_CLASS_MISMATCH = 4,
  MVF_E_NOT_SPD = 5,
  MVF_E_NOT_SYMMETRIC = 6,
  MVF_E_NOT_SKEW = 7,
  MVF_E_LOG_BRANCH = 8,
  MVF_E_SINGULAR = 9,
  MVF_E_ZERO_PRINCIPAL_MINOR = 10,
  MVF_E_NONPOSITIVE_DETERMINANT = 11,
  MVF_E_DEGREE_MISMATCH = 12,
  MVF_E_NONPOSITIVE_SAMPLE = 13,
  MVF_E_SIGN_PATTERN = 14,
  MVF_E_ZERO_DIAGONAL = 15,
  MVF_E_SIGN_VECTOR_MISMATCH = 16,
  MVF_E_OUT_OF_DOMAIN = 17,
  MVF_E_SELF_CHECK = 18,
  MVF_E_INTERNAL = 99
} mvf_status;

typedef struct mvf_context mvf_context;
typedef struct mvf_samples mvf_samples;
typedef struct mvf_curve mvf_curve;

MVF_API const char* mvf_status_string(mvf_status status);
/* 1 for bad input text or arguments, 2 for numeric/precondition failures. */
MVF_API int mvf_status_is_usage(mvf_status status);

MVF_API mvf_context* mvf_context_create(void);
MVF_API void mvf_context_destroy(mvf_context* ctx);
/* Class-membership tolerance; must be positive. */
MVF_API mvf_status mvf_context_set_tolerance(mvf_context* ctx, double tau_class);
MVF_API double mvf_context_tolerance(const mvf_context* ctx);
MVF_API const char* mvf_last_error(const mvf_context* ctx);
/* Sample index attached to the last error, or -1. */
MVF_API int mvf_last_error_sample(const mvf_context* ctx);

/* data holds count matrices of order n, each row-major. */
MVF_API mvf_status mvf_samples_create(mvf_context* ctx, size_t count, size_t n, const double* t,
                                      const double* data, const char* class_tag,
                                      mvf_samples** out);
MVF_API mvf_status mvf_samples_from_json(mvf_context* ctx, const char* json, mvf_samples** out);
/* Re-ingests CSV written by mvf_curve_sample_csv. */
MVF_API mvf_status mvf_samples_from_csv(mvf_context* ctx, const char* csv, const char* class_tag,
                                        mvf_samples** out);
MVF_API mvf_status mvf_samples_to_json(mvf_context* ctx, const mvf_samples* samples, char** json);
MVF_API void mvf_samples_destroy(mvf_samples* samples);
MVF_API size_t mvf_samples_count(const mvf_samples* samples);
MVF_API size_t mvf_samples_order(const mvf_samples* samples);
/* out receives n*n doubles, row-major. */
MVF_API mvf_status mvf_samples_matrix(mvf_context* ctx, const mvf_samples* samples, size_t index,
                                      double* out);

/* kind: qr, ldu, polar, spectral or cholesky. */
MVF_API mvf_status mvf_decompose(mvf_context* ctx, const mvf_samples* samples, const char* kind,
                                 char** json);

MVF_API mvf_status mvf_curve_build(mvf_context* ctx, const mvf_samples* samples,
                                   const char* config_json, mvf_curve** out);
MVF_API void mvf_curve_destroy(mvf_curve* curve);
MVF_API size_t mvf_curve_order(const mvf_curve* curve);
MVF_API void mvf_curve_domain(const mvf_curve* curve, double* t_min, double* t_max);
/* Grid size from the config ("grid": {"count": N}), default 101. */
MVF_API size_t mvf_curve_grid_count(const mvf_curve* curve);
/* 1 when the config asked for diagnostics. */
MVF_API int mvf_curve_wants_diagnostics(const mvf_curve* curve);
MVF_API mvf_status mvf_curve_eval(mvf_context* ctx, const mvf_curve* curve, double t, double* out);
/* JSON array of warning strings. */
MVF_API mvf_status mvf_curve_warnings(mvf_context* ctx, const mvf_curve* curve, char** json);
/* Evaluates count uniformly spaced points over the domain. diagnostics_csv
 * may be NULL. */
MVF_API mvf_status mvf_curve_sample_csv(mvf_context* ctx, const mvf_curve* curve, size_t count,
                                        char** values_csv, char** diagnostics_csv);

MVF_API mvf_status mvf_order_report(mvf_context* ctx, const char* truth_id,
                                    const char* config_json, int levels, char** json);
MVF_API mvf_status mvf_ellipsoid_demo(mvf_context* ctx, char** json);
/* Runs a verification suite; *all_passed is 1 when every check passed. */
MVF_API mvf_status mvf_check_suite(mvf_context* ctx, const char* name, uint64_t seed,
                                   char** json, int* all_passed);

MVF_API void mvf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
