#ifndef PARAPATH_H
#define PARAPATH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PpStatus {
  PP_STATUS_OK = 0,
  PP_STATUS_NULL_ARGUMENT = 1,
  PP_STATUS_INVALID_UTF8 = 2,
  PP_STATUS_PARSE_ERROR = 3,
  PP_STATUS_INVALID_INPUT = 4,
  PP_STATUS_CAP_EXCEEDED = 5,
  PP_STATUS_PANIC = 6,
} PpStatus;

/*
 A finite-dimensional quotient algebra with its Groebner basis.
 */
typedef struct PpAlgebra PpAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses an algebra file and builds the quotient algebra. A cap of 0 uses
 the default (tip length 50, basis size 100000).

 # Safety
 `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PpStatus pp_algebra_parse(const char *text,
                               size_t max_tip_length,
                               size_t max_basis,
                               struct PpAlgebra **out);

/*
 # Safety
 `algebra` must come from [`pp_algebra_parse`] or be null.
 */
void pp_algebra_free(struct PpAlgebra *algebra);

/*
 # Safety
 `algebra` must be a live handle and `dim` a valid pointer.
 */
enum PpStatus pp_algebra_dim(const struct PpAlgebra *algebra, size_t *dim);

/*
 Dimensions of HH^0 and HH^1.

 # Safety
 `algebra` must be a live handle; `hh0` and `hh1` valid pointers.
 */
enum PpStatus pp_algebra_hh_dims(const struct PpAlgebra *algebra, size_t *hh0, size_t *hh1);

/*
 The `hh` report as `key=value` lines.

 # Safety
 `algebra` must be a live handle and `out` a valid pointer; free the
 result with [`pp_string_free`].
 */
enum PpStatus pp_algebra_hh_report(const struct PpAlgebra *algebra, char **out);

/*
 Invariant report of a Brauer graph algebra and its associated graded
 algebra as `key=value` lines. `passed` is set to 1 when no identity check
 failed.

 # Safety
 `text` must be a NUL-terminated string; `out` and `passed` valid
 pointers. Free the result with [`pp_string_free`].
 */
enum PpStatus pp_brauer_report(const char *text,
                               size_t max_tip_length,
                               size_t max_basis,
                               char **out,
                               int32_t *passed);

/*
 # Safety
 `s` must come from this library or be null.
 */
void pp_string_free(char *s);

/*
 Message of the last failed call on this thread, or null. Valid until the
 next call into the library from the same thread.
 */
const char *pp_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PARAPATH_H */
