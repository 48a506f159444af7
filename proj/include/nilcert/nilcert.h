#ifndef NILCERT_NILCERT_H
#define NILCERT_NILCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NILCERT_API __declspec(dllexport)
#else
#define NILCERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nilcert_status {
    NILCERT_OK = 0,
    NILCERT_E_DIVISION_BY_ZERO = 1,
    NILCERT_E_DIMENSION_MISMATCH = 2,
    NILCERT_E_SINGULAR = 3,
    NILCERT_E_MULTIPLE_RADICALS = 4,
    NILCERT_E_SYNTAX = 5,
    NILCERT_E_UNKNOWN_NAME = 6,
    NILCERT_E_NOT_IN_VARIETY = 7,
    NILCERT_E_CYCLE = 8,
    NILCERT_E_IO = 9,
    NILCERT_E_INVALID_ARGUMENT = 10,
    NILCERT_E_INTERNAL = 99
} nilcert_status;

typedef enum nilcert_graph_format { NILCERT_GRAPH_DOT = 0, NILCERT_GRAPH_JSON = 1 } nilcert_graph_format;

typedef enum nilcert_graph_view {
    NILCERT_VIEW_GRAPH = 0,   /* verified edges plus trivial edges to C5 */
    NILCERT_VIEW_CLOSURE = 1,
    NILCERT_VIEW_HASSE = 2
} nilcert_graph_view;

typedef struct nilcert_algebra nilcert_algebra;
typedef struct nilcert_witness nilcert_witness;

typedef struct nilcert_verify_options {
    const char* data_dir;      /* NULL: the directory compiled into the library */
    uint64_t seed;
    size_t samples;            /* random escape samples per certificate target */
    size_t probe_samples;      /* Borel probe samples per certificate source */
    const double* t_samples;   /* numeric cross-check points; NULL: 1e-4 */
    size_t t_sample_count;
    unsigned jobs;
    int with_timings;          /* nonzero: add timings and environment to the report */
} nilcert_verify_options;

NILCERT_API const char* nilcert_version(void);
NILCERT_API const char* nilcert_status_name(nilcert_status status);

/* Message of the last failed call on this thread; empty when none. */
NILCERT_API const char* nilcert_last_error(void);

/* Frees any string returned through a char** out parameter. */
NILCERT_API void nilcert_string_free(char* s);

NILCERT_API nilcert_status nilcert_algebra_from_catalog(const char* name, nilcert_algebra** out);
NILCERT_API nilcert_status nilcert_algebra_read(const char* path, nilcert_algebra** out);
NILCERT_API nilcert_status nilcert_algebra_parse(const char* text, nilcert_algebra** out);
NILCERT_API void nilcert_algebra_free(nilcert_algebra* a);
NILCERT_API size_t nilcert_algebra_dim(const nilcert_algebra* a);
NILCERT_API nilcert_status nilcert_algebra_to_text(const nilcert_algebra* a, char** out);

/* JSON: dim Der, dims of powers, dim Ann, nilpotency index, identities. */
NILCERT_API nilcert_status nilcert_algebra_invariants(const nilcert_algebra* a, char** json_out);
/* JSON: dimension and an echelonized basis of derivation matrices. */
NILCERT_API nilcert_status nilcert_algebra_derivations(const nilcert_algebra* a, char** json_out);
/* JSON: catalog names with a matching fingerprint. */
NILCERT_API nilcert_status nilcert_algebra_identify(const nilcert_algebra* a, char** json_out);

NILCERT_API nilcert_status nilcert_witness_read(const char* path, nilcert_witness** out);
NILCERT_API nilcert_status nilcert_witness_parse(const char* text, nilcert_witness** out);
NILCERT_API void nilcert_witness_free(nilcert_witness* w);
NILCERT_API nilcert_status nilcert_witness_to_text(const nilcert_witness* w, char** out);

/* Exact verdict plus numeric cross-check. *verified is 1 iff the status is VERIFIED. */
NILCERT_API nilcert_status nilcert_witness_verify(const nilcert_witness* w, const double* t_samples, size_t t_sample_count,
                                                  char** json_out, int* verified);

NILCERT_API void nilcert_verify_options_init(nilcert_verify_options* options);

/* Full run over a data directory. *all_pass is 1 iff every check passed. */
NILCERT_API nilcert_status nilcert_verify_all(const nilcert_verify_options* options, char** json_out, int* all_pass);

NILCERT_API nilcert_status nilcert_graph_emit(const char* data_dir, nilcert_graph_format format, nilcert_graph_view view,
                                              char** out);

#ifdef __cplusplus
}
#endif

#endif
