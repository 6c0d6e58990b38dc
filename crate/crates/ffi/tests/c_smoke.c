#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sublex.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    SublexCode *code = NULL;
    CHECK(sublex_lexicode(6, 3, 4, 2, 1, &code) == SUBLEX_STATUS_OK);
    size_t len = 0;
    CHECK(sublex_code_len(code, &len) == SUBLEX_STATUS_OK);
    CHECK(len == 59);
    int64_t min = 0;
    CHECK(sublex_code_min_distance(code, 1, &min) == SUBLEX_STATUS_OK);
    CHECK(min == 4);

    size_t needed = 0;
    CHECK(sublex_code_render(code, NULL, 0, &needed) == SUBLEX_STATUS_BUFFER_TOO_SMALL);
    char *text = malloc(needed);
    CHECK(sublex_code_render(code, text, needed, &needed) == SUBLEX_STATUS_OK);
    CHECK(strncmp(text, "q=2 n=6 k=3 d=4 M=59\n", 21) == 0);
    SublexCode *back = NULL;
    CHECK(sublex_code_parse(text, &back) == SUBLEX_STATUS_OK);
    free(text);
    sublex_code_free(back);
    sublex_code_free(code);

    CHECK(sublex_lexicode(4, 2, 6, 2, 1, &code) == SUBLEX_STATUS_INVALID_ARGUMENT);
    char msg[128];
    CHECK(sublex_last_error(msg, sizeof msg) > 0);
    CHECK(strstr(msg, "d exceeds 2k") != NULL);

    const uint8_t a[] = {1, 0, 0, 0, 0, 1, 0, 0};
    const uint8_t b[] = {0, 0, 1, 0, 0, 0, 0, 1};
    uint32_t d = 0;
    CHECK(sublex_distance(2, 4, a, 2, b, 2, &d) == SUBLEX_STATUS_OK);
    CHECK(d == 4);
    printf("ok %s\n", sublex_version());
    return 0;
}
