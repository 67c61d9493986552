/* C interface to the bockstein dimension-type engine.
 *
 * All entry points return a bk_status; a human-readable message for the
 * last failing call on the current thread is available via bk_last_error().
 * Results are returned through opaque handles that the caller frees.
 */
#ifndef BOCKSTEIN_C_H
#define BOCKSTEIN_C_H

#include <stddef.h>

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_ERROR = 1,             /* unexpected internal failure */
  BK_PARSE_ERROR = 2,       /* syntax error; message carries the offset */
  BK_VALIDATION_ERROR = 3,  /* domain rule or precondition failed */
  BK_VERIFY_VIOLATIONS = 4, /* verification ran and found law violations */
  BK_BAD_ARGUMENT = 5       /* null pointer or out-of-range argument */
} bk_status;

typedef enum bk_format { BK_TEXT = 0, BK_JSON = 1 } bk_format;

typedef struct bk_str bk_str;   /* owned rendered document */
typedef struct bk_type bk_type; /* owned dimension type */

BK_API const char* bk_version(void);

/* Message for the last failing call on this thread ("" if none). */
BK_API const char* bk_last_error(void);

BK_API const char* bk_str_data(const bk_str* s);
BK_API size_t bk_str_size(const bk_str* s);
BK_API void bk_str_free(bk_str* s);

/* Command-level entry points. On BK_OK (and on BK_VERIFY_VIOLATIONS, which
 * still produces a full report) *out receives a rendered document. */
BK_API bk_status bk_eval(const char* expression, bk_format fmt, bk_str** out);
BK_API bk_status bk_classify(int dim_x, int dim_y, int dim_xy, int n,
                             bk_format fmt, bk_str** out);
BK_API bk_status bk_classify_types(const char* x_literal, const char* y_literal,
                                   int n, bk_format fmt, bk_str** out);
/* law is "typeminus" or "algebra". */
BK_API bk_status bk_verify(const char* law, const int* primes, size_t n_primes,
                           int max_value, bk_format fmt, bk_str** out);
BK_API bk_status bk_atlas(int max_n, bk_format fmt, bk_str** out);
BK_API bk_status bk_realizable(int dim_x, int dim_y, int dim_xy,
                               const int* primes, size_t n_primes,
                               int max_value, bk_format fmt, bk_str** out);

/* Dimension-type handles for embedding the calculus directly. */
BK_API bk_status bk_type_parse(const char* literal, bk_type** out);
BK_API bk_status bk_type_const(int n, bk_type** out);
BK_API bk_status bk_type_clone(const bk_type* t, bk_type** out);
BK_API bk_status bk_type_print(const bk_type* t, bk_str** out);
BK_API bk_status bk_type_boxplus(const bk_type* a, const bk_type* b, bk_type** out);
BK_API bk_status bk_type_oplus(const bk_type* a, const bk_type* b, bk_type** out);
BK_API bk_status bk_type_add(const bk_type* t, int n, bk_type** out);
BK_API bk_status bk_type_ominus(int n, const bk_type* t, bk_type** out);
BK_API bk_status bk_type_dim(const bk_type* t, int* out);
/* *out receives 1 or 0. */
BK_API bk_status bk_type_le(const bk_type* a, const bk_type* b, int* out);
/* dim of t with respect to a group expression such as "Z^2+Z/12+Zinf(3)". */
BK_API bk_status bk_type_dim_wrt(const bk_type* t, const char* group, int* out);
BK_API void bk_type_free(bk_type* t);

#ifdef __cplusplus
}
#endif

#endif /* BOCKSTEIN_C_H */
