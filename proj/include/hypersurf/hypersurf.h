/* C interface to the hypersurf library.
 *
 * Polynomials are opaque handles. Every function that can fail returns an
 * hs_status; the message for the last failure on the calling thread is
 * available from hs_last_error(). Strings returned through char** are owned
 * by the caller and must be released with hs_string_free().
 */
#ifndef HYPERSURF_HYPERSURF_H
#define HYPERSURF_HYPERSURF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HYPERSURF_BUILDING_LIBRARY)
#    define HS_API __declspec(dllexport)
#  else
#    define HS_API __declspec(dllimport)
#  endif
#else
#  define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hs_polynomial hs_polynomial;

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_PARSE = 1,      /* malformed polynomial, rational or sphere text */
  HS_ERR_INPUT = 2,      /* well-formed but unusable input (dimension, domain) */
  HS_ERR_VALIDATION = 3, /* an internal self-check failed */
  HS_ERR_INTERNAL = 4,
  HS_ERR_NOT_FOUND = 5   /* unknown corpus entry */
} hs_status;

typedef enum hs_var_mode {
  HS_VARS_AUTO = 0,    /* x,y,z,w for dim <= 4, x1..xd beyond */
  HS_VARS_NAMED = 1,
  HS_VARS_INDEXED = 2
} hs_var_mode;

typedef struct hs_options {
  uint64_t seed;
  int samples;
  double tolerance;
  double radius;      /* ball search radius */
  int ball_sign;      /* 0 = automatic, +1 or -1 */
  const char* target_c; /* optional rational CMC target, may be NULL */
} hs_options;

HS_API void hs_options_init(hs_options* options);

HS_API const char* hs_version(void);

/* Message for the most recent failure on this thread, "" if none. */
HS_API const char* hs_last_error(void);

/* Byte offset of the most recent parse error on this thread, or -1. */
HS_API long hs_last_error_position(void);

HS_API void hs_string_free(char* s);

/* dim == 0 infers the dimension from the highest variable used. */
HS_API hs_status hs_polynomial_parse(const char* text, size_t dim, hs_var_mode mode, hs_polynomial** out);
HS_API hs_status hs_polynomial_from_corpus(const char* name, hs_polynomial** out);
HS_API void hs_polynomial_free(hs_polynomial* p);

HS_API size_t hs_polynomial_dim(const hs_polynomial* p);
/* Total degree, -1 for the zero polynomial. */
HS_API int hs_polynomial_degree(const hs_polynomial* p);
HS_API hs_status hs_polynomial_format(const hs_polynomial* p, char** out);
HS_API hs_status hs_polynomial_evaluate(const hs_polynomial* p, const double* x, size_t n, double* out);
HS_API hs_status hs_mean_curvature_at(const hs_polynomial* p, const double* x, size_t n, double* out);

/* JSON reports. */
HS_API hs_status hs_analyze(const hs_polynomial* p, const hs_options* options, char** json);
HS_API hs_status hs_classify(const hs_polynomial* p, const hs_options* options, char** json);
HS_API hs_status hs_cmc(const hs_polynomial* p, const hs_options* options, char** json);
HS_API hs_status hs_decompose(const hs_polynomial* p, char** json);
/* sphere_spec is "k,(a1,...,ak+1),r2"; the block occupies coordinates
 * block_start .. block_start+k. */
HS_API hs_status hs_divide(const hs_polynomial* p, const char* sphere_spec, size_t block_start, char** json);
HS_API hs_status hs_ball(const hs_polynomial* p, const hs_options* options, char** json);

HS_API hs_status hs_corpus_list(char** json);
/* name == NULL runs every entry. */
HS_API hs_status hs_corpus_run(const char* name, const hs_options* options, char** json);

#ifdef __cplusplus
}
#endif

#endif
