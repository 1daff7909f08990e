#include <stdio.h>
#include <string.h>

#include "peadyn.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    PeadynWord *w = NULL;
    PeadynWord *next = NULL;
    CHECK(peadyn_word_parse(10, "123", &w) == PEADYN_STATUS_OK);
    CHECK(peadyn_word_step(w, &next) == PEADYN_STATUS_OK);
    char *s = peadyn_word_to_string(next);
    CHECK(strcmp(s, "131211") == 0);
    peadyn_string_free(s);

    PeadynOrbit *o = NULL;
    CHECK(peadyn_orbit(w, 10000, &o) == PEADYN_STATUS_OK);
    CHECK(peadyn_orbit_period(o) == 1);
    s = peadyn_word_to_string(peadyn_orbit_cycle_word(o, 0));
    CHECK(strcmp(s, "14233221") == 0);
    peadyn_string_free(s);
    peadyn_orbit_free(o);
    peadyn_word_free(next);
    peadyn_word_free(w);

    PeadynWordList *fixed = NULL;
    CHECK(peadyn_fixed_points(2, &fixed) == PEADYN_STATUS_OK);
    CHECK(peadyn_word_list_len(fixed) == 2);
    peadyn_word_list_free(fixed);

    size_t bound = 0;
    char *count = NULL;
    CHECK(peadyn_length_bound(6, &bound, &count) == PEADYN_STATUS_OK);
    CHECK(bound == 15);
    CHECK(strcmp(count, "564221981490") == 0);
    peadyn_string_free(count);

    CHECK(peadyn_word_parse(2, "12", &w) == PEADYN_STATUS_INVALID_INPUT);
    CHECK(peadyn_last_error() != NULL);

    puts("ok");
    return 0;
}
