#include <stdio.h>
#include <string.h>

#include "torus_vassiliev.h"

static int expect(const char *what, const char *got, const char *want) {
    if (strcmp(got, want) != 0) {
        fprintf(stderr, "%s: got %s, want %s\n", what, got, want);
        return 1;
    }
    return 0;
}

int main(void) {
    int bad = 0;
    TvTable *beta = NULL;
    if (tv_invariants(2, 3, TV_KIND_BETA, TV_METHOD_CLOSED_FORM, 6, &beta) != TV_STATUS_OK) {
        fprintf(stderr, "tv_invariants: %s\n", tv_last_error());
        return 1;
    }
    char *value = NULL;
    tv_table_get(beta, 6, 5, &value);
    bad |= expect("beta(6,5)", value, "5071");
    tv_string_free(value);
    tv_table_free(beta);

    TvSeries *series = NULL;
    if (tv_expand(TV_FAMILY_SO_N, 7, 0, 2, 3, 2, false, &series) != TV_STATUS_OK) {
        fprintf(stderr, "tv_expand: %s\n", tv_last_error());
        return 1;
    }
    tv_series_coefficient(series, 2, &value);
    bad |= expect("SO(7) x^2", value, "-15/2");
    tv_string_free(value);
    tv_series_free(series);

    TvTable *none = NULL;
    if (tv_invariants(2, 4, TV_KIND_BETA, TV_METHOD_CLOSED_FORM, 6, &none) != TV_STATUS_NOT_A_KNOT || none != NULL) {
        fprintf(stderr, "(2,4) accepted\n");
        bad = 1;
    }
    if (tv_last_error() == NULL) {
        fprintf(stderr, "no error message\n");
        bad = 1;
    }
    printf("%s\n", bad ? "FAIL" : "ok");
    return bad;
}
