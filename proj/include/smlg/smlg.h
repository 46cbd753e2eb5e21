/* smlg: string matching in labeled graphs, orthogonal-vectors reduction
 * builders, splitting-parameter plans, and substring edit distance.
 *
 * C API of the shared library. All handles are opaque and immutable once
 * created; functions return SMLG_OK or an error code, with a thread-local
 * detail message available from smlg_last_error(). Handles may be shared
 * across threads for read-only use.
 */
#ifndef SMLG_H
#define SMLG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SMLG_BUILD_SHARED)
#define SMLG_API __declspec(dllexport)
#else
#define SMLG_API __declspec(dllimport)
#endif
#else
#define SMLG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smlg_status {
    SMLG_OK = 0,
    SMLG_ERR_ARGUMENT = 1,   /* bad argument or precondition violation */
    SMLG_ERR_PARSE = 2,      /* malformed input text (message names the line) */
    SMLG_ERR_VALIDATION = 3, /* operation requires a valid graph */
    SMLG_ERR_HYPOTHESIS = 4, /* parameters outside the supported regime */
    SMLG_ERR_CAP = 5,        /* brute-force oracle invoked beyond its cap */
    SMLG_ERR_IO = 6
} smlg_status;

SMLG_API const char* smlg_version(void);
SMLG_API const char* smlg_status_name(smlg_status status);
/* Detail for the most recent failing call on this thread; empty, never NULL. */
SMLG_API const char* smlg_last_error(void);
/* Name of the deterministic generator behind smlg_ov_random. */
SMLG_API const char* smlg_rng_name(void);

typedef struct smlg_graph smlg_graph;     /* node-labeled directed graph */
typedef struct smlg_pattern smlg_pattern; /* token sequence */
typedef struct smlg_ov smlg_ov;           /* two sets of bit vectors */
typedef struct smlg_sets smlg_sets;       /* family of subsets of [1..u] */

SMLG_API void smlg_graph_free(smlg_graph* g);
SMLG_API void smlg_pattern_free(smlg_pattern* p);
SMLG_API void smlg_ov_free(smlg_ov* inst);
SMLG_API void smlg_sets_free(smlg_sets* family);
SMLG_API void smlg_string_free(char* text);
SMLG_API void smlg_path_free(uint32_t* path);

/* ---- text formats ----------------------------------------------------- */

SMLG_API smlg_status smlg_graph_parse(const char* text, smlg_graph** out);
SMLG_API smlg_status smlg_graph_serialize(const smlg_graph* g, char** text_out);
SMLG_API smlg_status smlg_pattern_parse(const char* text, smlg_pattern** out);
SMLG_API smlg_status smlg_pattern_serialize(const smlg_pattern* p, char** text_out);
SMLG_API smlg_status smlg_ov_parse(const char* text, smlg_ov** out);
SMLG_API smlg_status smlg_ov_serialize(const smlg_ov* inst, char** text_out);
SMLG_API smlg_status smlg_sets_parse(const char* text, smlg_sets** out);
SMLG_API smlg_status smlg_sets_serialize(const smlg_sets* family, char** text_out);

/* ---- graph model ------------------------------------------------------ */

SMLG_API size_t smlg_graph_node_count(const smlg_graph* g);
SMLG_API size_t smlg_graph_edge_count(const smlg_graph* g);
SMLG_API size_t smlg_pattern_length(const smlg_pattern* p);

/* Every invariant violation, one per line, in *report_out (empty string when
 * valid); *violations_out receives the count. */
SMLG_API smlg_status smlg_graph_validate(const smlg_graph* g, char** report_out,
                                         size_t* violations_out);
SMLG_API smlg_status smlg_graph_is_deterministic(const smlg_graph* g, int* out);
SMLG_API smlg_status smlg_graph_max_degree_sum(const smlg_graph* g, uint32_t* out);
SMLG_API smlg_status smlg_graph_is_dag(const smlg_graph* g, int* out);

/* ---- matching --------------------------------------------------------- */

SMLG_API smlg_status smlg_match_online(const smlg_graph* g, const smlg_pattern* p,
                                       int* matched_out);
/* Pass 0 for either cap to keep its default (64 nodes / 32 tokens). */
SMLG_API smlg_status smlg_match_bruteforce(const smlg_graph* g, const smlg_pattern* p,
                                           uint32_t node_cap, uint32_t pattern_cap,
                                           int* matched_out);
/* On a match, *path_out (owned by the caller, smlg_path_free) holds |P| node
 * ids; with no match, *path_out is NULL and *length_out is 0. */
SMLG_API smlg_status smlg_find_match_path(const smlg_graph* g, const smlg_pattern* p,
                                          uint32_t** path_out, size_t* length_out);
SMLG_API smlg_status smlg_verify_witness(const smlg_graph* g, const smlg_pattern* p,
                                         const uint32_t* path, size_t length, int* ok_out);

/* ---- orthogonal vectors ----------------------------------------------- */

SMLG_API smlg_status smlg_ov_shape(const smlg_ov* inst, uint32_t* n_out, uint32_t* m_out,
                                   uint32_t* d_out);
/* Each bit is 1 with probability one_probability; plant_orthogonal_pair
 * forces one random pair orthogonal. Deterministic in seed. */
SMLG_API smlg_status smlg_ov_random(uint32_t n, uint32_t m, uint32_t d, double one_probability,
                                    int plant_orthogonal_pair, uint64_t seed, smlg_ov** out);
SMLG_API smlg_status smlg_ov_solve_bruteforce(const smlg_ov* inst, int* answer_out);
/* Requires |X| == |Y| == n and 1 <= group_x, group_y <= n; covers the
 * instance with ceil(n/group_x) * ceil(n/group_y) brute-force subproblems. */
SMLG_API smlg_status smlg_partition_and_solve(const smlg_ov* inst, uint32_t group_x,
                                              uint32_t group_y, int* answer_out,
                                              uint64_t* subproblems_out);
/* ceil(n^a)^b <= c * n^(a*b) for every n in n_values (all >= 2). */
SMLG_API smlg_status smlg_ceil_power_bound_check(double a, double b, const uint64_t* n_values,
                                                 size_t count, double c, int* holds_out);

/* ---- splitting plans --------------------------------------------------- */

typedef enum smlg_split_case {
    SMLG_CASE_1_1_1 = 0,
    SMLG_CASE_1_1_2 = 1,
    SMLG_CASE_1_2 = 2,
    SMLG_CASE_1_3 = 3,
    SMLG_CASE_2_1 = 4,
    SMLG_CASE_2_2 = 5
} smlg_split_case;

typedef struct smlg_split_plan {
    smlg_split_case case_id;
    double eps;
    double eps_prime;
    double n_tilde;
    double m_tilde;
    uint64_t n_cap; /* N = ceil(n_tilde) */
    uint64_t m_cap; /* M = ceil(m_tilde) */
} smlg_split_plan;

typedef struct smlg_plan_report {
    double cond_a_exp; /* log_n(N^(alpha-1) n), must stay < 2 */
    double cond_b_exp; /* log_n(N^(delta-1) M^(beta-1) n^2), must stay < 2 */
    int cond_at_ok;
    int cond_bt_ok;
    int cond_c_ok;
    int cond_d_ok;
    double tol;
} smlg_plan_report;

SMLG_API const char* smlg_split_case_name(smlg_split_case case_id);
/* Requires alpha > 0, delta > 0, n >= 1 and delta < 1 or beta < 1
 * (SMLG_ERR_HYPOTHESIS otherwise). */
SMLG_API smlg_status smlg_split_plan_compute(double alpha, double delta, double beta,
                                             uint64_t n, smlg_split_plan* plan_out);
SMLG_API smlg_status smlg_split_plan_verify(const smlg_split_plan* plan, uint64_t n,
                                            double alpha, double delta, double beta, double tol,
                                            smlg_plan_report* report_out);

/* ---- reduction builders ------------------------------------------------ */

typedef enum smlg_variant { SMLG_VARIANT_ACYCLIC = 0, SMLG_VARIANT_CYCLIC = 1 } smlg_variant;

typedef struct smlg_reduction_info {
    uint32_t start_node;
    uint32_t end_node;
    uint32_t chain_length;      /* universal components per chain */
    uint32_t w_component_count; /* one per vector of X */
    uint32_t back_edge_count;   /* 2 for cyclic, 0 for acyclic */
    /* the added cycle edges, valid when back_edge_count == 2 */
    uint32_t back_edge_src[2];
    uint32_t back_edge_dst[2];
} smlg_reduction_info;

/* Gadget graph built from the X side only; pattern built from the Y side
 * only. The pattern has a match in the graph iff some pair is orthogonal
 * (acyclic: guaranteed for M <= N; cyclic: any M). */
SMLG_API smlg_status smlg_reduction_graph(const smlg_ov* inst, smlg_variant variant,
                                          smlg_graph** graph_out, smlg_reduction_info* info_out);
SMLG_API smlg_status smlg_reduction_pattern(const smlg_ov* inst, smlg_pattern** pattern_out);

SMLG_API smlg_status smlg_sets_shape(const smlg_sets* family, uint32_t* count_out,
                                     uint32_t* universe_out);
/* Direct intersection test, the oracle for sic queries. 1-based indices. */
SMLG_API smlg_status smlg_sets_intersect(const smlg_sets* family, uint32_t i, uint32_t j,
                                         int* out);
SMLG_API smlg_status smlg_sic_graph(const smlg_sets* family, smlg_graph** graph_out);
/* Matches "s<i>" "A" "t<j>" in a sic graph: true iff sets i and j intersect. */
SMLG_API smlg_status smlg_sic_query(const smlg_graph* g, uint32_t i, uint32_t j, int* out);

/* ---- edit distance ------------------------------------------------------ */

SMLG_API smlg_status smlg_edit_distance(const char* a, const char* b, uint64_t* out);
SMLG_API smlg_status smlg_substring_edit_distance(const char* text, const char* pattern,
                                                  uint64_t* out);
/* Pass 0 for either cap to keep its default (15 text / 8 pattern). */
SMLG_API smlg_status smlg_substring_ed_bruteforce(const char* text, const char* pattern,
                                                  uint32_t text_cap, uint32_t pattern_cap,
                                                  uint64_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SMLG_H */
