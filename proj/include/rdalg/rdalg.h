/* C interface to the rdalg exact series library. */
#ifndef RDALG_H
#define RDALG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RDALG_API __declspec(dllexport)
#else
#define RDALG_API __attribute__((visibility("default")))
#endif

typedef enum rdalg_status {
  RDALG_OK = 0,
  RDALG_INVALID_ARGUMENT,
  RDALG_NOT_DIVISIBLE,
  RDALG_MISSING_SYMBOL,
  RDALG_NOT_A_DIVISOR,
  RDALG_NON_UNIT_LEADING_COEFFICIENT,
  RDALG_LEADING_COEFFICIENT_NOT_ZERO,
  RDALG_LEADING_COEFFICIENT_NOT_ONE,
  RDALG_CONSTANT_TERM_NOT_ONE,
  RDALG_TRUNCATION_TOO_SMALL,
  RDALG_KIND_MISMATCH,
  RDALG_SINGULAR_DIAGONAL,
  RDALG_SYNTAX_ERROR,
  RDALG_UNKNOWN_FUNCTION,
  RDALG_ARITY_MISMATCH,
  RDALG_IO_ERROR,
  RDALG_INTERNAL_ERROR
} rdalg_status;

typedef struct rdalg_series rdalg_series;
typedef struct rdalg_matrix rdalg_matrix;
typedef struct rdalg_report rdalg_report;

typedef enum rdalg_matrix_kind {
  RDALG_MATRIX_MULT = 0,     /* <a, x> */
  RDALG_MATRIX_COLUMN,       /* <x | a> */
  RDALG_MATRIX_MIXED,        /* <b | a> */
  RDALG_MATRIX_RD,           /* <b, a> */
  RDALG_MATRIX_RIORDAN       /* ordinary (b, a) */
} rdalg_matrix_kind;

/* Message for the last failing call on this thread; never NULL. */
RDALG_API const char* rdalg_last_error(void);
RDALG_API const char* rdalg_status_name(rdalg_status status);
RDALG_API const char* rdalg_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
RDALG_API void rdalg_string_free(char* s);

/* Series built from an expression, e.g. "dpow_param(eps)", at order trunc. */
RDALG_API rdalg_status rdalg_series_eval(const char* expr, unsigned trunc, rdalg_series** out);
RDALG_API rdalg_status rdalg_series_from_json(const char* json, rdalg_series** out);
RDALG_API void rdalg_series_free(rdalg_series* s);
RDALG_API int rdalg_series_is_dirichlet(const rdalg_series* s);
RDALG_API unsigned rdalg_series_trunc(const rdalg_series* s);
/* Coefficient n as polynomial text. */
RDALG_API rdalg_status rdalg_series_coeff(const rdalg_series* s, unsigned n, char** out);
RDALG_API rdalg_status rdalg_series_to_json(const rdalg_series* s, char** out);
RDALG_API rdalg_status rdalg_series_to_csv(const rdalg_series* s, char** out);

/* Parses and prints an expression in canonical form. */
RDALG_API rdalg_status rdalg_expr_normalize(const char* expr, char** out);

/* b may be NULL; it defaults to x (Dirichlet kinds) or 1 (riordan). */
RDALG_API rdalg_status rdalg_matrix_build(rdalg_matrix_kind kind, const rdalg_series* a, const rdalg_series* b,
                                          unsigned size, rdalg_matrix** out);
RDALG_API void rdalg_matrix_free(rdalg_matrix* m);
RDALG_API rdalg_status rdalg_matrix_entry(const rdalg_matrix* m, unsigned row, unsigned col, char** out);
RDALG_API rdalg_status rdalg_matrix_to_csv(const rdalg_matrix* m, char** out);
RDALG_API rdalg_status rdalg_matrix_to_json(const rdalg_matrix* m, char** out);

RDALG_API rdalg_status rdalg_bell_table_csv(unsigned n_max, unsigned m_max, int tilde, int symbolic, char** out);
/* m < 0 lists every m. */
RDALG_API rdalg_status rdalg_factorizations_text(uint64_t n, int m, char** out);

/* suite: "all" or one suite name; bound 0 keeps each check's default. */
RDALG_API rdalg_status rdalg_verify(const char* suite, unsigned bound, unsigned jobs, uint64_t seed,
                                    rdalg_report** out);
RDALG_API void rdalg_report_free(rdalg_report* r);
RDALG_API size_t rdalg_report_size(const rdalg_report* r);
RDALG_API size_t rdalg_report_failures(const rdalg_report* r);
/* Line i as "PASS|FAIL <id> n=<n>"; the pointer lives as long as r. */
RDALG_API const char* rdalg_report_line(const rdalg_report* r, size_t i);
RDALG_API int rdalg_report_line_passed(const rdalg_report* r, size_t i);
RDALG_API rdalg_status rdalg_report_text(const rdalg_report* r, char** out);
RDALG_API rdalg_status rdalg_report_json(const rdalg_report* r, char** out);

/* Test hook: n > 0 adds 1 to coefficient n of every Dirichlet product; 0 clears. */
RDALG_API void rdalg_set_fault_index(unsigned n);

#ifdef __cplusplus
}
#endif

#endif /* RDALG_H */
