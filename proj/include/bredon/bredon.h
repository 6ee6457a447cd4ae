/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the bredon library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Every
 * function returning bredon_status leaves a description of the most recent
 * failure in bredon_last_error() (thread-local). Strings returned through
 * char** out-parameters are heap-allocated and released with
 * bredon_string_free.
 */
#ifndef BREDON_H
#define BREDON_H

#include <stddef.h>

#if defined(_WIN32)
#define BREDON_API __declspec(dllexport)
#else
#define BREDON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bredon_status {
    BREDON_OK = 0,
    BREDON_ERR_PARSE = 1,      /* malformed descriptor, format or document */
    BREDON_ERR_DOMAIN = 2,     /* well-formed input outside the supported domain */
    BREDON_ERR_HYPOTHESIS = 3, /* representation fails the fixed-dimension drop */
    BREDON_ERR_CAP = 4,        /* group order above the cap */
    BREDON_ERR_INTERNAL = 5,   /* consistency check failed */
    BREDON_ERR_ARGUMENT = 6,   /* null handle or output pointer */
    BREDON_ERR_IO = 7          /* file could not be read */
} bredon_status;

typedef enum bredon_format {
    BREDON_FORMAT_TEXT = 0,
    BREDON_FORMAT_JSON = 1,
    BREDON_FORMAT_CSV = 2,
    BREDON_FORMAT_DOT = 3
} bredon_format;

typedef struct bredon_group bredon_group;
typedef struct bredon_coeffsys bredon_coeffsys;
typedef struct bredon_resolution bredon_resolution;
typedef struct bredon_decomposition bredon_decomposition;

BREDON_API const char* bredon_version(void);
BREDON_API const char* bredon_last_error(void);
BREDON_API const char* bredon_status_name(bredon_status s);
BREDON_API void bredon_string_free(char* s);

/* Parses "text", "json", "csv" or "dot". */
BREDON_API bredon_status bredon_format_parse(const char* name, bredon_format* out);

/* Group from a descriptor such as "D8", "S3", "Q8" or "perm:4:(0 1);(2 3)".
 * cap == 0 selects the default order cap. Builds the subgroup lattice and
 * the orbit category. */
BREDON_API bredon_status bredon_group_create(const char* descriptor, size_t cap, bredon_group** out);
BREDON_API void bredon_group_free(bredon_group* g);
BREDON_API size_t bredon_group_order(const bredon_group* g);
BREDON_API size_t bredon_group_class_count(const bredon_group* g);
BREDON_API size_t bredon_group_subgroup_count(const bredon_group* g);
BREDON_API size_t bredon_group_morphism_count(const bredon_group* g);
/* |Hom(G/H_i, G/H_j)| for classes i, j. */
BREDON_API bredon_status bredon_group_hom_size(const bredon_group* g, size_t i, size_t j, size_t* out);
BREDON_API bredon_status bredon_group_render_lattice(const bredon_group* g, bredon_format f, char** out);
BREDON_API bredon_status bredon_group_render_orbitcat(const bredon_group* g, bredon_format f, char** out);

/* "constQ", "atom:<class>", "zero" or "json:<path>". */
BREDON_API bredon_status bredon_coeffsys_create(const bredon_group* g, const char* descriptor, bredon_coeffsys** out);
/* Parses a document produced by bredon_coeffsys_to_json. */
BREDON_API bredon_status bredon_coeffsys_from_json(const bredon_group* g, const char* json, bredon_coeffsys** out);
BREDON_API bredon_status bredon_coeffsys_to_json(const bredon_coeffsys* m, char** out);
BREDON_API bredon_status bredon_coeffsys_dim(const bredon_coeffsys* m, size_t cls, size_t* out);
BREDON_API void bredon_coeffsys_free(bredon_coeffsys* m);

BREDON_API bredon_status bredon_hom_dim(const bredon_coeffsys* source, const bredon_coeffsys* target, size_t* out);

BREDON_API bredon_status bredon_hom_render(const bredon_coeffsys* source, const bredon_coeffsys* target,
                                           const char* source_name, const char* target_name, bredon_format f,
                                           char** out);

BREDON_API bredon_status bredon_resolve(const bredon_coeffsys* m, bredon_resolution** out);
BREDON_API void bredon_resolution_free(bredon_resolution* r);
BREDON_API size_t bredon_resolution_term_count(const bredon_resolution* r);
/* Term t of the resolution as a new coefficient system. */
BREDON_API bredon_status bredon_resolution_term(const bredon_resolution* r, size_t t, bredon_coeffsys** out);
BREDON_API bredon_status bredon_resolution_render(const bredon_resolution* r, bredon_format f, char** out);

/* Writes dim Ext^q(source, target) for q = 0..min(*count, terms)-1 into
 * dims; on return *count holds the number of resolution terms. */
BREDON_API bredon_status bredon_ext_dims(const bredon_coeffsys* source, const bredon_coeffsys* target,
                                         size_t* dims, size_t* count);
/* The source_name/target_name strings label the rendered table. */
BREDON_API bredon_status bredon_ext_render(const bredon_coeffsys* source, const bredon_coeffsys* target,
                                           const char* source_name, const char* target_name, bredon_format f,
                                           char** out);

BREDON_API bredon_status bredon_betti_render(int n, int q, bredon_format f, char** out);

/* Representation descriptor: "regular", "regular:<s>" or
 * "cosets:<class>x<mult>,...". */
BREDON_API bredon_status bredon_decompose(const bredon_group* g, const char* representation, int q,
                                          bredon_decomposition** out);
BREDON_API void bredon_decomposition_free(bredon_decomposition* d);
BREDON_API bredon_status bredon_decomposition_render(const bredon_decomposition* d, bredon_format f, char** out);
/* Row of homological degree `degree` as a coefficient system. */
BREDON_API bredon_status bredon_decomposition_system(const bredon_decomposition* d, int degree, bredon_coeffsys** out);

BREDON_API bredon_status bredon_e2page_render(const bredon_decomposition* d, const bredon_coeffsys* m, bredon_format f,
                                              char** out);
BREDON_API bredon_status bredon_constq_render(const bredon_decomposition* d, bredon_format f, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BREDON_H */
