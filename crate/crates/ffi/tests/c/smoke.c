#include <stdio.h>
#include <string.h>
#include "parapath.h"

int main(void) {
    PpAlgebra *a = NULL;
    size_t hh0 = 0, hh1 = 0;
    if (pp_algebra_parse("vertex v\narrow x: v -> v\nrel x^3\n", 0, 0, &a) != PP_STATUS_OK) return 1;
    if (pp_algebra_hh_dims(a, &hh0, &hh1) != PP_STATUS_OK) return 2;
    pp_algebra_free(a);
    if (pp_algebra_parse("vertex v\nrel\n", 0, 0, &a) == PP_STATUS_OK) return 3;
    if (pp_last_error_message() == NULL) return 4;
    printf("%zu %zu\n", hh0, hh1);
    return 0;
}
