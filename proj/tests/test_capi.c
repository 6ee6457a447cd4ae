/* Exercises the C interface from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "bredon/bredon.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

int main(void) {
    bredon_group* g = NULL;
    bredon_coeffsys* q = NULL;
    bredon_coeffsys* a0 = NULL;
    bredon_coeffsys* back = NULL;
    bredon_resolution* r = NULL;
    bredon_decomposition* d = NULL;
    char* text = NULL;
    size_t n = 0;
    size_t dims[8];
    size_t count = 8;
    bredon_format f;

    EXPECT(bredon_group_create("D8", 0, &g) == BREDON_OK);
    EXPECT(bredon_group_order(g) == 8);
    EXPECT(bredon_group_class_count(g) == 8);
    EXPECT(bredon_group_subgroup_count(g) == 10);
    EXPECT(bredon_group_hom_size(g, 0, 0, &n) == BREDON_OK && n == 8);
    EXPECT(bredon_group_hom_size(g, 7, 0, &n) == BREDON_OK && n == 0);
    EXPECT(bredon_group_hom_size(g, 9, 0, &n) == BREDON_ERR_DOMAIN);

    EXPECT(bredon_coeffsys_create(g, "constQ", &q) == BREDON_OK);
    EXPECT(bredon_coeffsys_create(g, "atom:0", &a0) == BREDON_OK);
    EXPECT(bredon_hom_dim(a0, q, &n) == BREDON_OK && n == 1);
    EXPECT(bredon_hom_dim(q, a0, &n) == BREDON_OK && n == 0);

    EXPECT(bredon_resolve(a0, &r) == BREDON_OK);
    EXPECT(bredon_resolution_term_count(r) == 3);
    EXPECT(bredon_resolution_render(r, BREDON_FORMAT_JSON, &text) == BREDON_OK);
    EXPECT(text && strstr(text, "bredon.resolution/1") != NULL);
    bredon_string_free(text);
    text = NULL;

    EXPECT(bredon_ext_dims(q, a0, dims, &count) == BREDON_OK);
    EXPECT(count == 3 && dims[0] == 0 && dims[1] == 0 && dims[2] == 0);
    count = 0;
    EXPECT(bredon_ext_dims(q, a0, NULL, &count) == BREDON_OK && count == 3);

    EXPECT(bredon_coeffsys_to_json(a0, &text) == BREDON_OK);
    EXPECT(bredon_coeffsys_from_json(g, text, &back) == BREDON_OK);
    EXPECT(bredon_coeffsys_dim(back, 0, &n) == BREDON_OK && n == 1);
    EXPECT(bredon_coeffsys_dim(back, 1, &n) == BREDON_OK && n == 0);
    bredon_string_free(text);
    text = NULL;

    EXPECT(bredon_decompose(g, "regular", 3, &d) == BREDON_OK);
    EXPECT(bredon_decomposition_render(d, BREDON_FORMAT_TEXT, &text) == BREDON_OK);
    EXPECT(text && strstr(text, "H_0 = Q + 5*1_7") != NULL);
    bredon_string_free(text);
    text = NULL;
    EXPECT(bredon_e2page_render(d, a0, BREDON_FORMAT_CSV, &text) == BREDON_OK);
    EXPECT(text && strstr(text, "0,1,,,,,3,2") != NULL);
    bredon_string_free(text);
    text = NULL;

    /* errors */
    {
        bredon_group* none = NULL;
        EXPECT(bredon_group_create("nope", 0, &none) == BREDON_ERR_PARSE);
        EXPECT(none == NULL);
        EXPECT(strlen(bredon_last_error()) > 0);
        EXPECT(bredon_group_create("S5", 50, &none) == BREDON_ERR_CAP);
    }
    EXPECT(bredon_coeffsys_create(NULL, "constQ", &q) == BREDON_ERR_ARGUMENT);
    EXPECT(bredon_hom_dim(q, a0, NULL) == BREDON_ERR_ARGUMENT);
    EXPECT(bredon_format_parse("xml", &f) == BREDON_ERR_PARSE);
    EXPECT(bredon_format_parse("dot", &f) == BREDON_OK && f == BREDON_FORMAT_DOT);

    {
        bredon_group* s3 = NULL;
        bredon_coeffsys* other = NULL;
        bredon_decomposition* bad = NULL;
        EXPECT(bredon_group_create("S3", 0, &s3) == BREDON_OK);
        EXPECT(bredon_coeffsys_create(s3, "json:/does/not/exist", &other) == BREDON_ERR_IO);
        EXPECT(other == NULL);
        EXPECT(bredon_coeffsys_create(s3, "constQ", &other) == BREDON_OK);
        EXPECT(bredon_hom_dim(other, q, &n) == BREDON_ERR_DOMAIN);
        EXPECT(bredon_decompose(s3, "cosets:3x1", 3, &bad) == BREDON_ERR_HYPOTHESIS);
        EXPECT(bad == NULL);
        bredon_coeffsys_free(other);
        bredon_group_free(s3);
    }

    bredon_decomposition_free(d);
    bredon_resolution_free(r);
    bredon_coeffsys_free(back);
    bredon_coeffsys_free(a0);
    bredon_coeffsys_free(q);
    bredon_group_free(g);

    if (failures) {
        fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    printf("C API checks passed\n");
    return 0;
}
