/* C interface to the census engine. Every function that can fail returns an
 * fpc_status; on failure fpc_last_error() describes the problem until the
 * next call on the same thread. Strings returned through char** must be
 * released with fpc_string_free. */
#ifndef FPCENSUS_H
#define FPCENSUS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FPC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define FPC_API __attribute__((visibility("default")))
#else
#define FPC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpc_status {
    FPC_OK = 0,
    FPC_ERR_PARAMETER = 1,  /* argument out of range, conflicting options */
    FPC_ERR_FORMAT = 2,     /* malformed graph, signature or triangulation text */
    FPC_ERR_CONTRACT = 3,   /* precondition broken by the caller */
    FPC_ERR_INCOMPLETE = 4, /* triangulation has unglued faces */
    FPC_ERR_INTERNAL = 5
} fpc_status;

typedef enum fpc_orientation {
    FPC_BOTH = 0,
    FPC_ORIENTABLE = 1,
    FPC_NONORIENTABLE = 2
} fpc_orientation;

typedef struct fpc_graph_list fpc_graph_list;
typedef struct fpc_pairing fpc_pairing;
typedef struct fpc_unit_list fpc_unit_list;
typedef struct fpc_result fpc_result;

typedef struct fpc_search_config {
    int mode; /* fpc_orientation */
    int track_vertex_links;
    int track_edge_links;
    int census_constraints;
    int relaxed;
} fpc_search_config;

typedef struct fpc_filter_verdict {
    int old;
    int straybigon;
    int square;
    int mountains;
    int kept;
} fpc_filter_verdict;

#define FPC_PRUNE_REASONS 10

typedef struct fpc_stats {
    uint64_t nodes;
    uint64_t prunes[FPC_PRUNE_REASONS];
    uint64_t leaves;
    uint64_t survivors;
} fpc_stats;

typedef struct fpc_closed_report {
    int is_3mfd;
    int vertices;
    int edges;
    int orientable;
} fpc_closed_report;

FPC_API const char* fpc_version(void);
FPC_API const char* fpc_last_error(void);
FPC_API void fpc_string_free(char* s);

/* Graph lists. */
FPC_API fpc_status fpc_graphs_enumerate(int n, fpc_graph_list** out);
/* Parses a graph file body; errors name the offending line. */
FPC_API fpc_status fpc_graphs_parse(const char* text, size_t len, fpc_graph_list** out);
FPC_API void fpc_graphs_free(fpc_graph_list* list);
FPC_API size_t fpc_graphs_count(const fpc_graph_list* list);
FPC_API int fpc_graph_order(const fpc_graph_list* list, size_t index);
/* One line of the graph text format, without newline. */
FPC_API fpc_status fpc_graph_render(const fpc_graph_list* list, size_t index, char** out);
/* Compact relabeling-invariant code, "<n>:" followed by base-36 edge ends. */
FPC_API fpc_status fpc_graph_code(const fpc_graph_list* list, size_t index, char** out);
FPC_API fpc_status fpc_graph_filter(const fpc_graph_list* list, size_t index, fpc_filter_verdict* out);

/* Search. */
FPC_API void fpc_search_config_default(fpc_search_config* cfg);
FPC_API fpc_status fpc_check_config(int n, const fpc_search_config* cfg);
FPC_API fpc_status fpc_pairing_from_graph(const fpc_graph_list* list, size_t index, fpc_pairing** out);
FPC_API void fpc_pairing_free(fpc_pairing* pairing);

/* Accepted gluing prefixes of the given depth (clamped to 2n). */
FPC_API fpc_status fpc_partition(const fpc_pairing* pairing, const fpc_search_config* cfg, int depth,
                                 fpc_unit_list** out);
FPC_API void fpc_units_free(fpc_unit_list* units);
FPC_API size_t fpc_units_count(const fpc_unit_list* units);
FPC_API fpc_status fpc_run_unit(const fpc_pairing* pairing, const fpc_search_config* cfg,
                                const fpc_unit_list* units, size_t index, fpc_result** out);
FPC_API fpc_status fpc_run_pairing(const fpc_pairing* pairing, const fpc_search_config* cfg, fpc_result** out);

FPC_API void fpc_result_free(fpc_result* result);
FPC_API size_t fpc_result_signature_count(const fpc_result* result);
/* Rendered signature, valid while the result lives; sorted ascending. */
FPC_API const char* fpc_result_signature(const fpc_result* result, size_t index);
FPC_API void fpc_result_stats(const fpc_result* result, fpc_stats* out);
FPC_API const char* fpc_prune_reason_name(int reason);

/* Decodes a rendered signature and validates the triangulation it names. */
FPC_API fpc_status fpc_signature_report(const char* signature, fpc_closed_report* out);
/* Decodes a signature and reports whether it meets the census local rules. */
FPC_API fpc_status fpc_signature_census_ok(const char* signature, int* out);

#ifdef __cplusplus
}
#endif

#endif
