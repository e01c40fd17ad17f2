/* charvar: exact trace polynomials, half-cyclotomic families, and the
 * defining polynomial of the SL(2,C) character variety of (m,2) torus knots.
 *
 * All functions return cv_status; results are written through out
 * parameters.  Polynomials are opaque handles freed with cv_poly_free;
 * strings returned by the library are freed with cv_string_free.  On any
 * failure cv_last_error_message() describes the most recent error of the
 * calling thread.
 */
#ifndef CHARVAR_H
#define CHARVAR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cv_status {
    CV_OK = 0,
    CV_ERROR_BAD_ARGUMENT = 1,
    CV_ERROR_NOT_DIVISIBLE = 2,
    CV_ERROR_ZERO_DIVISOR = 3,
    CV_ERROR_NOT_UNIVARIATE = 4,
    CV_ERROR_MISSING_ASSIGNMENT = 5,
    CV_ERROR_ROUTE_DISAGREEMENT = 6,
    CV_ERROR_PARSE = 7,
    CV_ERROR_BAD_RANGE = 8,
    CV_ERROR_NOT_ODD_M = 9,
    CV_ERROR_UNKNOWN_GENERATOR = 10,
    CV_ERROR_RELATION_VIOLATED = 11,
    CV_ERROR_DEGENERATE_SAMPLE = 12,
    CV_ERROR_INTERNAL = 13
} cv_status;

typedef enum cv_q_route {
    CV_Q_ROUTE_RECURSIVE = 0,
    CV_Q_ROUTE_VIA_CYCLOTOMIC = 1,
    CV_Q_ROUTE_BOTH = 2
} cv_q_route;

typedef enum cv_form {
    CV_FORM_DIRECT = 0,
    CV_FORM_CLOSED = 1,
    CV_FORM_TRACE = 2
} cv_form;

typedef enum cv_rep_kind {
    CV_REP_ABELIAN = 0,
    CV_REP_IRREDUCIBLE = 1
} cv_rep_kind;

typedef struct cv_poly cv_poly;

const char* cv_version(void);
const char* cv_status_name(cv_status status);
const char* cv_last_error_message(void);

void cv_poly_free(cv_poly* poly);
void cv_string_free(char* str);

/* Polynomial JSON schema:
 *   {"vars":["X","Y","Z"],"terms":[{"e":[eX,eY,eZ],"c":"<decimal>"}]}
 * with terms in descending graded-lex order. */
cv_status cv_poly_from_json(const char* json, cv_poly** out);
cv_status cv_poly_to_json(const cv_poly* poly, char** out);
cv_status cv_poly_to_text(const cv_poly* poly, char** out);
cv_status cv_poly_equal(const cv_poly* a, const cv_poly* b, int* out_equal);
/* var is one of 'X', 'Y', 'Z'; the zero polynomial reports -1. */
cv_status cv_poly_degree(const cv_poly* poly, char var, int* out_degree);

/* The polynomial families (univariate in Z). */
cv_status cv_trace_power_poly(unsigned n, cv_poly** out);
cv_status cv_cyclotomic_poly(unsigned n, cv_poly** out);
cv_status cv_half_cyclotomic_poly(unsigned n, cv_q_route route, cv_poly** out);
cv_status cv_poly_star(const cv_poly* poly, cv_poly** out);
cv_status cv_generator_count(unsigned long long n, unsigned long long* out);

/* Words use the syntax "xyXY" (uppercase = inverse) with powers "x^3",
 * "(xy)^5". */
cv_status cv_word_reduce(const char* word, char** out_reduced);
cv_status cv_word_trace_poly(const char* word, cv_poly** out);

/* Defining polynomial of X(H_m) for odd m > 1, by any of the three routes. */
cv_status cv_variety_defining(unsigned m, cv_form form, cv_poly** out);
/* {"m":...,"parabola":"Z=X^2-2","lines":[...],"defining_poly":{...}} */
cv_status cv_curve_description_json(unsigned m, char** out_json);
cv_status cv_line_levels(unsigned m, double* out_levels, size_t capacity, size_t* out_count);
/* CSV with header "component,x,z". */
cv_status cv_plot_csv(unsigned m, double x_min, double x_max, unsigned samples,
                      char** out_csv);

/* Verification sweeps.  Each returns a JSON array of report objects
 *   {"identity":"...","range":[lo,hi],"passed":bool,"first_failure":n|null}
 * and sets *out_all_passed to 0/1.  Failing checks are data, not errors. */
cv_status cv_verify_families_json(unsigned max_n, char** out_json, int* out_all_passed);
cv_status cv_verify_variety_json(unsigned max_m, unsigned max_m_trace,
                                 unsigned max_m_divisibility, char** out_json,
                                 int* out_all_passed);
/* fixture_json: {"q":{"<n>":<polynomial JSON>,...}}; every entry is compared
 * against the freshly computed q_n. */
cv_status cv_verify_q_fixture_json(const char* fixture_json, char** out_json,
                                   int* out_all_passed);

/* Seeded numeric sampling; returns a JSON array of per-sample reports
 * {"m":...,"kind":"...","seed":...,"X":[re,im],"Z":[re,im],
 *  "residual_defining":...,"residual_relation":...,"nearest_line":l|null,...}
 * and sets *out_all_within_tol. */
cv_status cv_sample_reports_json(unsigned m, unsigned count, unsigned long long seed,
                                 double tol, cv_rep_kind kind, char** out_json,
                                 int* out_all_within_tol);

#ifdef __cplusplus
}
#endif

#endif /* CHARVAR_H */
