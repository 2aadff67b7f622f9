#include <stdio.h>
#include <string.h>

#include "gqt.h"

int main(void) {
    GqtField *f = NULL;
    GqtKernel *k = NULL;
    char msg[128];
    uint32_t r = 0;
    uint64_t violations = 1;

    if (gqt_field_new(3, 2, &f) != GQT_STATUS_OK) return 1;
    if (gqt_field_binop(f, GQT_BIN_OP_MUL, 3, 3, &r) != GQT_STATUS_OK) return 2;
    if (gqt_kernel_enumerate(f, 4, false, &k) != GQT_STATUS_OK) return 3;
    if (gqt_kernel_point_count(k) != 280 || gqt_kernel_line_count(k) != 112) return 4;
    if (gqt_kernel_one_or_all(k, &violations) != GQT_STATUS_OK || violations != 0) return 5;
    if (gqt_field_inv(f, 0, &r) != GQT_STATUS_DIVISION_BY_ZERO) return 6;
    if (gqt_last_error_message(msg, sizeof msg) == 0 || strlen(msg) == 0) return 7;

    printf("points=%zu lines=%zu\n", gqt_kernel_point_count(k), gqt_kernel_line_count(k));
    gqt_kernel_free(k);
    gqt_field_free(f);
    return 0;
}
