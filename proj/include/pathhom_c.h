#ifndef PATHHOM_C_H
#define PATHHOM_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PATHHOM_BUILDING)
#    define PH_API __declspec(dllexport)
#  else
#    define PH_API __declspec(dllimport)
#  endif
#else
#  define PH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns PH_OK or an error status; the message of the last
   failure on the calling thread is available from ph_last_error(). */
typedef enum ph_status {
    PH_OK = 0,
    PH_ERR_LOOP_ARROW,
    PH_ERR_DUPLICATE_ARROW,
    PH_ERR_UNKNOWN_ENDPOINT,
    PH_ERR_EMPTY_VERTEX_SET,
    PH_ERR_DUPLICATE_VERTEX,
    PH_ERR_UNKNOWN_VERTEX,
    PH_ERR_LABEL_COLLISION,
    PH_ERR_NOT_A_MAP,
    PH_ERR_INDEX_OUT_OF_RANGE,
    PH_ERR_IRREGULAR_INPUT,
    PH_ERR_NOT_CLUSTER_CHAIN,
    PH_ERR_DEGREE_ZERO,
    PH_ERR_NOT_TAIL_CHAIN,
    PH_ERR_NOT_HEAD_CHAIN,
    PH_ERR_WRONG_DEGREE,
    PH_ERR_NOT_ALLOWED_CHAIN,
    PH_ERR_NO_INTEGER_SOLUTION,
    PH_ERR_DIMENSION_MISMATCH,
    PH_ERR_DEGREE_OUT_OF_RANGE,
    PH_ERR_NOT_ASYMMETRIC,
    PH_ERR_CHAIN_MAP_VIOLATION,
    PH_ERR_INVALID_THEORY,
    PH_ERR_INTERNAL_CONSISTENCY,
    PH_ERR_PARSE,
    PH_ERR_UNDEFINED,        /* cluster digraph does not exist */
    PH_ERR_INVALID_ARGUMENT, /* null pointer, missing endpoint, bad option */
    PH_ERR_OUT_OF_MEMORY,
    PH_ERR_UNKNOWN
} ph_status;

typedef struct ph_digraph ph_digraph;
typedef struct ph_report ph_report;

PH_API const char* ph_version(void);
PH_API const char* ph_status_name(ph_status status);
/* Valid until the next failing call on the same thread. */
PH_API const char* ph_last_error(void);
/* 1-based location of the last parse error, 0 when there is none. */
PH_API size_t ph_last_error_line(void);
PH_API size_t ph_last_error_column(void);
/* Frees strings returned through char** out-parameters. */
PH_API void ph_string_free(char* s);

/* Text format, or the structured form when the input starts with '{'. */
PH_API ph_status ph_digraph_parse(const char* text, ph_digraph** out);
PH_API void ph_digraph_free(ph_digraph* g);
PH_API size_t ph_digraph_vertex_count(const ph_digraph* g);
PH_API size_t ph_digraph_arrow_count(const ph_digraph* g);
PH_API ph_status ph_digraph_to_text(const ph_digraph* g, char** out);
PH_API ph_status ph_digraph_to_json(const ph_digraph* g, char** out);

PH_API ph_status ph_construct_cube(unsigned n, ph_digraph** out);
PH_API ph_status ph_construct_inverse(const ph_digraph* g, ph_digraph** out);
PH_API ph_status ph_construct_cone(const ph_digraph* g, const char* apex, ph_digraph** out);
PH_API ph_status ph_construct_inv_cone(const ph_digraph* g, const char* apex, ph_digraph** out);
PH_API ph_status ph_construct_suspension(const ph_digraph* g, const char* a, const char* b, ph_digraph** out);
PH_API ph_status ph_construct_inv_suspension(const ph_digraph* g, const char* a, const char* b, ph_digraph** out);
/* a -> v -> b for every vertex v of g. */
PH_API ph_status ph_construct_dir_suspension(const ph_digraph* g, const char* a, const char* b, ph_digraph** out);
PH_API ph_status ph_construct_box(const ph_digraph* g, const ph_digraph* h, ph_digraph** out);
/* PH_ERR_UNDEFINED when from != to and `to` is unreachable. */
PH_API ph_status ph_construct_cluster(const ph_digraph* g, const char* from, const char* to, ph_digraph** out);
PH_API ph_status ph_construct_tail(const ph_digraph* g, const char* from, ph_digraph** out);
PH_API ph_status ph_construct_head(const ph_digraph* g, const char* to, ph_digraph** out);

typedef struct ph_compute_options {
    const char* theory;       /* path | primitive | cluster | tail | head */
    const char* from;         /* tail label for cluster and tail, else NULL */
    const char* to;           /* head label for cluster and head, else NULL */
    int max_dim;              /* >= 0 */
    const char* coefficients; /* "Z", "Q" or "Fp:P"; NULL means "Z" */
    int reduced;              /* path and primitive only */
} ph_compute_options;

PH_API void ph_compute_options_init(ph_compute_options* opts);
PH_API ph_status ph_compute(const ph_digraph* g, const ph_compute_options* opts, ph_report** out);
PH_API void ph_report_free(ph_report* r);
PH_API size_t ph_report_degree_count(const ph_report* r);
/* Betti number in degree n, or (size_t)-1 when n is out of range. */
PH_API size_t ph_report_betti(const ph_report* r, size_t n);
PH_API ph_status ph_report_to_json(const ph_report* r, char** out);
PH_API ph_status ph_report_to_table(const ph_report* r, char** out);
PH_API ph_status ph_report_from_json(const char* text, ph_report** out);

typedef struct ph_verify_options {
    uint64_t seed;
    size_t instances;
    size_t max_vertices;
    int max_dim;
} ph_verify_options;

PH_API void ph_verify_options_init(ph_verify_options* opts);
/* *passed is 1 when every check family passed; *report gets the listing. */
PH_API ph_status ph_verify(const ph_verify_options* opts, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif
