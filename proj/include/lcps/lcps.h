/*
 * C interface to the LCPS library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns an lcps_status;
 * on failure lcps_last_error() holds a message for the calling thread until
 * its next failing call. Sequences are raw byte buffers with explicit
 * lengths and may contain NUL. Index arrays are 1-based.
 */
#ifndef LCPS_LCPS_H
#define LCPS_LCPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LCPS_BUILDING_LIBRARY)
#    define LCPS_API __declspec(dllexport)
#  else
#    define LCPS_API __declspec(dllimport)
#  endif
#else
#  define LCPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcps_status {
    LCPS_OK = 0,
    LCPS_ERR_INVALID_ARGUMENT = 1,
    LCPS_ERR_CAPACITY = 2,        /* a size cap would be exceeded */
    LCPS_ERR_INPUT_TOO_LARGE = 3, /* oracle length guard */
    LCPS_ERR_INVALID_WITNESS = 4,
    LCPS_ERR_LENGTH_MISMATCH = 5, /* benchmark cross-check failed */
    LCPS_ERR_OUT_OF_MEMORY = 6,
    LCPS_ERR_INTERNAL = 7
} lcps_status;

typedef enum lcps_algorithm {
    LCPS_ALGO_AUTO = 0,
    LCPS_ALGO_DP = 1,
    LCPS_ALGO_GEOM = 2,
    LCPS_ALGO_ORACLE = 3
} lcps_algorithm;

typedef struct lcps_limits {
    uint64_t max_dp_cells; /* n*n*m*m cap for the dynamic program */
    uint64_t max_rects;    /* cap on the sum over symbols of R_sigma^2 */
    uint64_t max_matches;  /* cap on R */
} lcps_limits;

typedef struct lcps_result lcps_result;
typedef struct lcps_match_summary lcps_match_summary;
typedef struct lcps_bench_report lcps_bench_report;

LCPS_API const char* lcps_version(void);
LCPS_API const char* lcps_last_error(void);
LCPS_API const char* lcps_status_name(lcps_status status);
LCPS_API const char* lcps_algorithm_name(lcps_algorithm algo);
/* Returns LCPS_ERR_INVALID_ARGUMENT for unknown names. */
LCPS_API lcps_status lcps_algorithm_parse(const char* name, lcps_algorithm* out);

LCPS_API void lcps_limits_default(lcps_limits* out);

/* ---- solving ---- */

/* limits may be NULL for defaults. */
LCPS_API lcps_status lcps_solve(const char* x, size_t x_len, const char* y, size_t y_len, lcps_algorithm algo,
                                const lcps_limits* limits, lcps_result** out);
LCPS_API void lcps_result_free(lcps_result* result);

LCPS_API size_t lcps_result_length(const lcps_result* result);
/* Palindrome bytes, lcps_result_length() of them, followed by a NUL. */
LCPS_API const char* lcps_result_palindrome(const lcps_result* result);
LCPS_API const int32_t* lcps_result_x_indices(const lcps_result* result);
LCPS_API const int32_t* lcps_result_y_indices(const lcps_result* result);
/* Algorithm that produced the witness; never LCPS_ALGO_AUTO. */
LCPS_API lcps_algorithm lcps_result_algorithm(const lcps_result* result);
LCPS_API uint64_t lcps_result_matches(const lcps_result* result);
LCPS_API double lcps_result_elapsed_ms(const lcps_result* result);

/* 1 if the witness is a common palindromic subsequence of x and y, else 0. */
LCPS_API int lcps_result_validate(const lcps_result* result, const char* x, size_t x_len, const char* y,
                                  size_t y_len);

/* ---- match statistics ---- */

LCPS_API lcps_status lcps_match_summary_compute(const char* x, size_t x_len, const char* y, size_t y_len,
                                                uint64_t max_matches, lcps_match_summary** out);
LCPS_API void lcps_match_summary_free(lcps_match_summary* summary);
LCPS_API uint64_t lcps_match_summary_total(const lcps_match_summary* summary);
/* Symbols present in both inputs, ascending by octet value. */
LCPS_API size_t lcps_match_summary_symbol_count(const lcps_match_summary* summary);
LCPS_API lcps_status lcps_match_summary_symbol(const lcps_match_summary* summary, size_t index,
                                               unsigned char* symbol, uint64_t* x_count, uint64_t* y_count,
                                               uint64_t* r_sigma);

/* ---- benchmark harness ---- */

typedef struct lcps_gen_spec {
    int32_t n;
    int32_t m;
    int32_t alphabet_size;
    uint64_t seed;
} lcps_gen_spec;

typedef enum lcps_row_status {
    LCPS_ROW_OK = 0,
    LCPS_ROW_CAPACITY_EXCEEDED = 1,
    LCPS_ROW_INPUT_TOO_LARGE = 2
} lcps_row_status;

typedef struct lcps_bench_row {
    lcps_gen_spec spec;
    lcps_algorithm algo;
    uint64_t r;
    int64_t length; /* -1 unless status is LCPS_ROW_OK */
    double median_ms;
    lcps_row_status status;
} lcps_bench_row;

/* Writes spec->n bytes to x_out and spec->m bytes to y_out. */
LCPS_API lcps_status lcps_generate(const lcps_gen_spec* spec, char* x_out, char* y_out);

LCPS_API lcps_status lcps_bench_run(const lcps_gen_spec* specs, size_t spec_count, const lcps_algorithm* algos,
                                    size_t algo_count, int32_t repetitions, const lcps_limits* limits,
                                    lcps_bench_report** out);
LCPS_API void lcps_bench_report_free(lcps_bench_report* report);
LCPS_API size_t lcps_bench_report_size(const lcps_bench_report* report);
LCPS_API lcps_status lcps_bench_report_row(const lcps_bench_report* report, size_t index, lcps_bench_row* out);
LCPS_API const char* lcps_row_status_name(lcps_row_status status);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LCPS_LCPS_H */
