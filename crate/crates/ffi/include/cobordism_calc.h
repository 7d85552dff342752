#ifndef COBORDISM_CALC_H
#define COBORDISM_CALC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_INPUT = 2,
  CC_STATUS_DIMENSION_MISMATCH = 3,
  CC_STATUS_PARSE = 4,
  // The call completed but the theorem check did not pass.
  CC_STATUS_VERIFICATION_FAILED = 5,
  CC_STATUS_INTERNAL = 6,
} CcStatus;

// Opaque handle to a cobordism class.
typedef struct CcClass CcClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *cc_last_error(void);

// Builds a class from `cp:<n>`, `surface:<a>,<b>`, `pbundle:<a>,<b>,<c>,<rank>`,
// `abelian:<c>,<rank>` or `file:<path>`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` a valid pointer.
enum CcStatus cc_class_from_spec(const char *spec, struct CcClass **out);

// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum CcStatus cc_class_from_json(const char *json, struct CcClass **out);

// # Safety
// `c` must be NULL or a handle from this library not yet freed.
void cc_class_free(struct CcClass *c);

// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum CcStatus cc_class_dim(const struct CcClass *c, uintptr_t *out);

// # Safety
// `a`, `b` must be live handles and `out` a valid pointer.
enum CcStatus cc_class_product(const struct CcClass *a,
                               const struct CcClass *b,
                               struct CcClass **out);

// The s-number as a `"p/q"` string.
//
// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum CcStatus cc_class_s_number(const struct CcClass *c, char **out);

// `χ_y` as a JSON array of `"p/q"` coefficients, constant term first.
//
// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum CcStatus cc_class_chi_y(const struct CcClass *c, char **out);

// # Safety
// `c` must be a live handle and `out` a valid pointer.
enum CcStatus cc_class_to_json(const struct CcClass *c, char **out);

// Runs one theorem check with the default generators. `kind` is one of
// `do`, `d`, `h`, `betti`. The JSON report is written to `out` whether or
// not the check passes; a failing check returns `VerificationFailed`.
//
// # Safety
// `kind` must be a NUL-terminated string and `out` a valid pointer.
enum CcStatus cc_verify_theorem(const char *kind, uintptr_t dim, char **out);

// # Safety
// `s` must be NULL or a string returned by this library not yet freed.
void cc_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* COBORDISM_CALC_H */
