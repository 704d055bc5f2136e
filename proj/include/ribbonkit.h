/* ribbonkit — exact arithmetic for ribbon Schur functions.
 *
 * C API over the C++ core: opaque handles, thread-local error state.
 * Functions returning pointers yield NULL on failure; functions returning
 * int yield a negative value on failure. Inspect rk_last_error() /
 * rk_last_error_message() for the cause. Strings returned as char* are
 * heap-allocated and must be released with rk_string_free().
 */

#ifndef RIBBONKIT_H
#define RIBBONKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RK_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#define RK_API __attribute__((visibility("default")))
#else
#define RK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
    RK_OK = 0,
    RK_ERR_PARSE = 1,    /* malformed text input */
    RK_ERR_DOMAIN = 2,   /* argument outside an operation's domain */
    RK_ERR_OVERFLOW = 3, /* 64-bit checked arithmetic overflowed */
    RK_ERR_MISMATCH = 4, /* basis / degree / size mismatch */
    RK_ERR_INTERNAL = 5
} rk_status;

typedef enum rk_format { RK_FORMAT_TEXT = 0, RK_FORMAT_JSON = 1 } rk_format;

typedef enum rk_basis { RK_BASIS_SCHUR = 0, RK_BASIS_H = 1 } rk_basis;

RK_API const char* rk_version(void);

/* Error state of the calling thread, set by the most recent failing call. */
RK_API rk_status rk_last_error(void);
RK_API const char* rk_last_error_message(void);

RK_API void rk_string_free(char* s);

/* ---- compositions and partitions -------------------------------------- */

typedef struct rk_composition rk_composition;

/* Accepts "3,1,3" (comma-separated decimal) or digits-only shorthand "313"
 * (one part per digit). A trailing comma forces the comma-separated reading:
 * "12," is the single part 12, while "12" is (1,2). */
RK_API rk_composition* rk_composition_parse(const char* text);
RK_API rk_composition* rk_composition_create(const int64_t* parts, size_t count);
RK_API void rk_composition_free(rk_composition* c);

RK_API size_t rk_composition_length(const rk_composition* c);
RK_API int64_t rk_composition_size(const rk_composition* c);
/* part at 0-based index, or -1 on range error */
RK_API int64_t rk_composition_part(const rk_composition* c, size_t index);
/* 1 if parts are weakly decreasing (a partition), else 0 */
RK_API int rk_composition_is_partition(const rk_composition* c);

/* TEXT: comma-separated decimal; JSON: array of integers */
RK_API char* rk_composition_format(const rk_composition* c, rk_format format);

RK_API rk_composition* rk_composition_reverse(const rk_composition* c);
RK_API rk_composition* rk_composition_canonical(const rk_composition* c);
RK_API rk_composition* rk_composition_transpose(const rk_composition* c);

/* Full statistics report: k, delta, z, p, p', q, q', epsilon, S', transpose,
 * adjacent pairs. Statistics fields are suppressed (TEXT) or null (JSON) for
 * all-ones compositions, where they are undefined. */
RK_API char* rk_stats_report(const rk_composition* c, rk_format format);

/* ---- symmetric function vectors -------------------------------------- */

typedef struct rk_symvec rk_symvec;

RK_API void rk_symvec_free(rk_symvec* v);

RK_API rk_symvec* rk_ribbon_to_schur(const rk_composition* c);
RK_API rk_symvec* rk_ribbon_to_h(const rk_composition* c);
/* Jacobi-Trudi expansion of a single Schur function; argument must be a
 * partition. */
RK_API rk_symvec* rk_schur_to_h(const rk_composition* partition);
RK_API rk_symvec* rk_symvec_subtract(const rk_symvec* a, const rk_symvec* b);
RK_API rk_symvec* rk_symvec_omega(const rk_symvec* v);

RK_API int rk_symvec_basis(const rk_symvec* v); /* rk_basis value, or -1 */
RK_API int rk_symvec_is_zero(const rk_symvec* v);
RK_API size_t rk_symvec_term_count(const rk_symvec* v);

/* TEXT: "s[3,3,1] + s[4,2,1]"; JSON: {"basis":..., "terms":[...]} with terms
 * lex-ascending in both formats. */
RK_API char* rk_symvec_format(const rk_symvec* v, rk_format format);

/* 1 and *nu_out set if v is exactly {nu: +1}; 0 if not; -1 on error. */
RK_API int rk_symvec_single_positive_schur(const rk_symvec* v, rk_composition** nu_out);
/* Lex-smallest index partition and its coefficient; fails on zero vectors. */
RK_API int rk_symvec_lex_minimal(const rk_symvec* v, rk_composition** partition_out,
                          int64_t* coeff_out);

/* ---- Littlewood-Richardson tableaux ----------------------------------- */

typedef struct rk_tableau_list rk_tableau_list;

RK_API rk_tableau_list* rk_lr_enumerate(const rk_composition* shape);
RK_API void rk_tableau_list_free(rk_tableau_list* list);
RK_API size_t rk_tableau_list_count(const rk_tableau_list* list);
RK_API char* rk_tableau_list_format(const rk_tableau_list* list, rk_format format);

/* Number of LR tableaux of the shape with the given content (a partition of
 * the same size); -1 on error. */
RK_API int64_t rk_lr_coefficient(const rk_composition* shape, const rk_composition* content);

/* ---- ribbon difference identity --------------------------------------- */

/* Report for the move (j, t) on the base ribbon: the moved composition, the
 * A and B tableau sets, the identity difference and the direct subtraction.
 * agree_out (optional) receives 1 when they match. */
RK_API char* rk_identity_report(const rk_composition* base, int64_t j, int64_t t,
                         rk_format format, int* agree_out);

/* ---- near-equality search and verification ---------------------------- */

typedef struct rk_search_result rk_search_result;

/* All pairs of ribbons of the given size (restricted to one length when
 * length > 0) whose difference is a single Schur function. threads = 0 means
 * available parallelism. */
RK_API rk_search_result* rk_search(int64_t size, int64_t length, int threads);
RK_API void rk_search_result_free(rk_search_result* result);
RK_API size_t rk_search_result_count(const rk_search_result* result);
/* JSON-lines, one record per line:
 * {"alpha":[...],"beta":[...],"nu":[...],"families":[{"id":n,"params":{...}}]} */
RK_API char* rk_search_result_records(const rk_search_result* result);
/* Per-family-id match counts footer. */
RK_API char* rk_search_result_summary(const rk_search_result* result, rk_format format);

/* Necessary-condition report for a Schur-positive difference r_a - r_b;
 * nu (optional) is the single Schur partition when known. */
RK_API char* rk_check_conditions(const rk_composition* a, const rk_composition* b,
                          const rk_composition* nu, rk_format format);

/* Family verification then conjecture verification. Returns 0 on PASS, 1 on
 * FAIL (report lists counterexamples), negative on error. *report_out is
 * always set on non-negative return. */
RK_API int rk_verify(int64_t max_size, int64_t family_size_cap, int threads,
              rk_format format, char** report_out);

/* Harness self-test: corrupts one family template in the classifier and
 * expects verification to FAIL. Returns 0 when the corruption is detected,
 * 1 otherwise, negative on error. */
RK_API int rk_verify_self_test(int threads, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RIBBONKIT_H */
