#ifndef NIB_H
#define NIB_H

/* C interface to the normal integral basis solver. Every function returns a
 * nib_error code; on failure nib_last_error() describes the problem for the
 * calling thread. Strings returned through char** are released with
 * nib_string_free. */

#include <stddef.h>

#if defined(NIB_BUILDING_LIBRARY)
#define NIB_API __attribute__((visibility("default")))
#else
#define NIB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nib_error {
  NIB_OK = 0,
  NIB_E_INVALID_ARGUMENT = 1,
  NIB_E_SINGULAR,
  NIB_E_NOT_POSITIVE_DEFINITE,
  NIB_E_NOT_INTEGRAL,
  NIB_E_DIVISION_BY_ZERO,
  NIB_E_ZERO_IDEAL,
  NIB_E_UNSUPPORTED_FIELD,
  NIB_E_RESOURCE_LIMIT,
  NIB_E_NOT_UNIT,
  NIB_E_INVALID_INPUT,
  NIB_E_PARSE,
  NIB_E_UNSUPPORTED_FIXTURE,
  NIB_E_INTERNAL,
  NIB_E_NULL_POINTER = 100
} nib_error;

typedef enum nib_status { NIB_FOUND = 0, NIB_NONEXISTENT = 1, NIB_INCONCLUSIVE = 2 } nib_status;

typedef struct nib_field nib_field;
typedef struct nib_result nib_result;

typedef struct nib_solve_options {
  const char* slack;         /* rational, e.g. "3/2" */
  int max_doublings;
  size_t enum_cap;           /* enumeration nodes per ideal */
  size_t coset_cap;
  const char* d_multiplier;  /* integer, D = multiplier * disc(conjugates of alpha) */
} nib_solve_options;

NIB_API void nib_solve_options_init(nib_solve_options* opts);

NIB_API const char* nib_last_error(void);
NIB_API const char* nib_error_name(int code);
NIB_API void nib_string_free(char* s);

/* Fields are validated on creation. */
NIB_API int nib_field_parse(const char* text, nib_field** out);
NIB_API int nib_field_load(const char* path, nib_field** out);
NIB_API int nib_field_fixture(long conductor, const long* subgroup, size_t count, nib_field** out);
NIB_API void nib_field_free(nib_field* f);
NIB_API int nib_field_format(const nib_field* f, char** text);
NIB_API int nib_field_degree(const nib_field* f, size_t* degree);
NIB_API int nib_field_discriminant(const nib_field* f, char** text);
/* Empty string when the file gives no conductor. */
NIB_API int nib_field_conductor(const nib_field* f, char** text);
NIB_API int nib_field_label(const nib_field* f, char** text);

NIB_API int nib_solve(const nib_field* f, const nib_solve_options* opts, nib_result** out);
NIB_API void nib_result_free(nib_result* r);
NIB_API int nib_result_status(const nib_result* r, nib_status* status);
/* Space-separated coordinates of theta over the integral basis (FOUND only). */
NIB_API int nib_result_theta(const nib_result* r, char** text);
NIB_API int nib_result_field_discriminant(const nib_result* r, char** text);
NIB_API int nib_result_report(const nib_result* r, int json, char** text);

/* theta: space- or comma-separated rationals over the integral basis. */
NIB_API int nib_verify(const nib_field* f, const char* theta, int* is_nib, int json, char** report);
NIB_API int nib_hilbert_speiser(const char* conductor, int* squarefree);
/* Index bound for the group with the given invariant factors. */
NIB_API int nib_bound(const long* factors, size_t count, char** text);

#ifdef __cplusplus
}
#endif

#endif
