#include <stdio.h>
#include <string.h>

#include "maxrep.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    MaxrepWord *w = NULL;
    CHECK(maxrep_word_new("abaababbababb", &w) == MAXREP_STATUS_OK);
    CHECK(maxrep_word_len(w) == 13);

    MaxrepRuns *runs = NULL;
    CHECK(maxrep_runs_new(w, &runs) == MAXREP_STATUS_OK);
    CHECK(maxrep_runs_len(runs) == 8);
    MaxrepRun r;
    CHECK(maxrep_runs_get(runs, 0, &r) == MAXREP_STATUS_OK);
    CHECK(r.start == 0 && r.end == 5 && r.period == 3);
    CHECK(maxrep_runs_get(runs, 8, &r) == MAXREP_STATUS_OUT_OF_RANGE);
    CHECK(maxrep_last_error_message() != NULL);
    maxrep_runs_free(runs);

    size_t count = 0;
    CHECK(maxrep_assignments(w, NULL, 0, &count) == MAXREP_STATUS_BUFFER_TOO_SMALL);
    CHECK(count == 8);
    MaxrepAssignment a[8];
    CHECK(maxrep_assignments(w, a, 8, &count) == MAXREP_STATUS_OK);

    size_t p = 0;
    CHECK(maxrep_smallest_period(w, &p) == MAXREP_STATUS_OK);
    CHECK(p == 13);
    maxrep_word_free(w);

    CHECK(maxrep_word_new("ab1", &w) == MAXREP_STATUS_INVALID_WORD);
    puts("ok");
    return 0;
}
