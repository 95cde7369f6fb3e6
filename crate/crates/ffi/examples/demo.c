#include <stdio.h>
#include "qqcorr.h"

int main(void) {
    QqParams *p = NULL;
    if (qq_params_from_preset("fig1", &p) != QQ_OK) {
        fprintf(stderr, "%s\n", qq_last_error());
        return 1;
    }
    QqReport r;
    QqStatus s = qq_run_point(p, 0.05, QQ_MEASURE_ALL, &r);
    if (s != QQ_OK) {
        fprintf(stderr, "%s\n", qq_last_error());
        qq_params_free(p);
        return 1;
    }
    printf("%.9f %.9f %.9f %.9f\n", r.negativity, r.min, r.uin, r.chsh_max);

    s = qq_run_point(p, -1.0, QQ_MEASURE_ALL, &r);
    printf("%d %s\n", (int)s, qq_last_error());
    qq_params_free(p);
    return 0;
}
