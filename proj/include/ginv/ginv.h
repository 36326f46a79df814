/* ginv: sparse structured generalized inverses of low-rank matrices.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed through this API; every computation returns a result handle
 * carrying a JSON report, a suggested process exit code, and optional matrix
 * artifacts (formatted text, ready to write to files).
 *
 * Numeric modes: "exact" (arbitrary-precision rationals), "float" (binary64),
 * or "auto" (exact for small inputs, float otherwise). In exact mode JSON
 * scalars are fraction strings such as "17/36"; in float mode they are plain
 * numbers.
 */

#ifndef GINV_H
#define GINV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GINV_API __declspec(dllexport)
#else
#define GINV_API __attribute__((visibility("default")))
#endif

typedef struct ginv_matrix ginv_matrix;
typedef struct ginv_result ginv_result;

typedef enum ginv_status {
    GINV_OK = 0,
    GINV_ERR_BAD_ARGUMENT = 1,
    GINV_ERR_PARSE = 2,
    GINV_ERR_DIMENSION = 3,
    GINV_ERR_COMPUTE = 4, /* singular / degenerate / rank mismatch */
    GINV_ERR_INTERNAL = 5
} ginv_status;

/* ---- matrices ---------------------------------------------------------- */

/* mode is "auto", "exact" or "float"; NULL means "auto". Input text is dense
 * rows (entries as integers, fractions "p/q", decimals) or Matrix Market. */
GINV_API ginv_status ginv_matrix_parse(const char* text, const char* mode,
                                       ginv_matrix** out);
GINV_API ginv_status ginv_matrix_read_file(const char* path, const char* mode,
                                           ginv_matrix** out);
/* row-major doubles, float mode */
GINV_API ginv_status ginv_matrix_from_dense(int rows, int cols, const double* data,
                                            ginv_matrix** out);
GINV_API void ginv_matrix_free(ginv_matrix* m);

GINV_API int ginv_matrix_rows(const ginv_matrix* m);
GINV_API int ginv_matrix_cols(const ginv_matrix* m);
GINV_API int ginv_matrix_is_exact(const ginv_matrix* m);
GINV_API ginv_status ginv_matrix_entry_double(const ginv_matrix* m, int i, int j,
                                              double* out);
/* dense text form; free with ginv_string_free */
GINV_API ginv_status ginv_matrix_format(const ginv_matrix* m, char** out);

/* ---- commands ----------------------------------------------------------- */

/* goal is "sym" or "ah". indices are 1-based block indices; pass NULL/0 to
 * search all blocks. */
GINV_API ginv_status ginv_construct(const ginv_matrix* a, const char* goal,
                                    const int* indices, int n_indices,
                                    ginv_result** out);
/* formulation is "p1", "p1sym" or "p1p3" */
GINV_API ginv_status ginv_minimize(const ginv_matrix* a, const char* formulation,
                                   ginv_result** out);
GINV_API ginv_status ginv_certify(const ginv_matrix* a, const char* goal,
                                  ginv_result** out);
GINV_API ginv_status ginv_compare(const ginv_matrix* a, ginv_result** out);
/* Moore-Penrose property report for a candidate H */
GINV_API ginv_status ginv_check_mp(const ginv_matrix* a, const ginv_matrix* h,
                                   ginv_result** out);

/* ---- results ------------------------------------------------------------ */

/* JSON RunReport; pointer owned by the result handle */
GINV_API const char* ginv_result_json(const ginv_result* r);
/* 0 success/optimal, 2 bad input, 3 infeasible/degenerate,
 * 4 suboptimality witness, 5 not certified */
GINV_API int ginv_result_exit_code(const ginv_result* r);
/* formatted matrix artifact by name (e.g. "H"); NULL if absent */
GINV_API const char* ginv_result_artifact(const ginv_result* r, const char* name);
GINV_API void ginv_result_free(ginv_result* r);

/* ---- misc --------------------------------------------------------------- */

/* message for the last failing call on this thread */
GINV_API const char* ginv_last_error(void);
GINV_API const char* ginv_status_name(ginv_status s);
GINV_API void ginv_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GINV_H */
