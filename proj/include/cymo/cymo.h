/* C interface to the cyclic-tuple moment library.
 *
 * Conventions:
 *   - Every function returns a cymo_status; CYMO_OK is 0.  On failure,
 *     cymo_last_error() returns a thread-local diagnostic message.
 *   - Output strings (char**) are heap-allocated JSON documents; release them
 *     with cymo_string_free.  Output handles are released with the matching
 *     *_free function.
 *   - Complex scalars and complex vectors cross the boundary as interleaved
 *     doubles [re0, im0, re1, im1, ...].
 */
#ifndef CYMO_H
#define CYMO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cymo_status {
  CYMO_OK = 0,
  CYMO_ERR_INVALID_ARGUMENT = 1,
  CYMO_ERR_PARSE = 2,
  CYMO_ERR_NUMERIC = 3,
  CYMO_ERR_DEGREE_TOO_SMALL = 4,
  CYMO_ERR_NOT_JORDAN = 5,
  CYMO_ERR_AMBIGUOUS_SPECTRUM = 6,
  CYMO_ERR_EMPTY_QUOTIENT = 7,
  CYMO_ERR_DIMENSION_MISMATCH = 8,
  CYMO_ERR_INTERNAL = 9,
  CYMO_ERR_NONCOMMUTING = 10
} cymo_status;

const char* cymo_version(void);
const char* cymo_last_error(void);
void cymo_string_free(char* s);

/* Opaque commuting tuple (T_1..T_n, h, gram) and moment table handles. */
typedef struct cymo_tuple cymo_tuple;
typedef struct cymo_moments cymo_moments;

/* ---- tuple construction ---- */
cymo_status cymo_tuple_parse_json(const char* text, cymo_tuple** out);
cymo_status cymo_tuple_jordan(int m, double lambda_re, double lambda_im, cymo_tuple** out);
cymo_status cymo_tuple_zero(int nvars, cymo_tuple** out);
cymo_status cymo_tuple_varopoulos_kaijser(cymo_tuple** out);
/* measure_json: {"atoms": [[complex...], ...], "weights": [w...]} */
cymo_status cymo_tuple_atomic_json(const char* measure_json, cymo_tuple** out);
void cymo_tuple_free(cymo_tuple* t);

cymo_status cymo_tuple_dims(const cymo_tuple* t, int* nvars, int* dim);
cymo_status cymo_tuple_to_json(const cymo_tuple* t, char** out);
/* Commutator, gram and cyclicity diagnostics. */
cymo_status cymo_tuple_validate(const cymo_tuple* t, char** report_json);
cymo_status cymo_tuple_op_norm(const cymo_tuple* t, int i, double* out);

/* ---- moment tables ---- */
cymo_status cymo_moments_compute(const cymo_tuple* t, int degree, cymo_moments** out);
cymo_status cymo_moments_parse_json(const char* text, cymo_moments** out);
void cymo_moments_free(cymo_moments* m);

cymo_status cymo_moments_to_json(const cymo_moments* m, char** out);
/* alpha, beta: arrays of len exponents. */
cymo_status cymo_moments_entry(const cymo_moments* m, const int* alpha, const int* beta, int len,
                               double* re, double* im);
/* lambda: interleaved complex of length n. */
cymo_status cymo_moments_translate(const cymo_moments* m, const double* lambda, int n,
                                   cymo_moments** out);
/* poly_json: {"n": ..., "terms": [{"alpha": [...], "coeff": complex}]} */
cymo_status cymo_moments_twist(const cymo_moments* m, const char* poly_json, cymo_moments** out);
cymo_status cymo_moments_convolve(const cymo_moments* a, const cymo_moments* b, cymo_moments** out);
/* Finite GNS reconstruction; result_json holds the tuple, nullity, residual. */
cymo_status cymo_moments_gns(const cymo_moments* m, double null_tol, char** result_json);

/* ---- reports (JSON documents on stdout-bound paths) ---- */

/* Truncated kernel operator: eigenvalues, HS norm against the a priori bound,
 * analytic-model residuals; check_convergence != 0 recomputes at degree + 2
 * and reports the eigenvalue shift. */
cymo_status cymo_fock_report(const cymo_tuple* t, int degree, int check_convergence, char** out);

/* F(z, w) with z, w interleaved complex of length n. */
cymo_status cymo_kernel_eval(const cymo_tuple* t, const double* z, const double* w, int n,
                             char** out);

/* support_json: {"type": "ball", "center": [...], "radius": r} or
 * {"type": "points", "points": [[...], ...]}.  radii/directions/seed control
 * the sampling; radii == NULL selects the default ladder. */
cymo_status cymo_growth_certificate(const cymo_tuple* t, const char* support_json,
                                    const double* radii, int nradii, int directions, uint64_t seed,
                                    char** out);
cymo_status cymo_rapid_decay(const cymo_tuple* t, const char* support_json, const int* orders,
                             int norders, const double* radii, int nradii, int directions,
                             uint64_t seed, char** out);

/* Joint spectral decomposition and the Jordan verdict. */
cymo_status cymo_classify(const cymo_tuple* t, uint64_t seed, char** out);

/* Distribution representation plus a round-trip verification table.
 * degree < 0 selects the degree the blocks need. */
cymo_status cymo_distribution(const cymo_tuple* t, int degree, uint64_t seed, char** out);

/* Convolution through moment tables and GNS, with the norm-bound check. */
cymo_status cymo_convolve_tuples(const cymo_tuple* a, const cymo_tuple* b, int degree, char** out);

/* Three joint-eigenvalue criteria at one lambda (interleaved complex). */
cymo_status cymo_eigen_report(const cymo_tuple* t, const double* lambda, int n, int degree,
                              char** out);

/* Built-in end-to-end reproduction; see cymo_example_names. */
cymo_status cymo_example_run(const char* name, uint64_t seed, char** out);
cymo_status cymo_example_names(char** out); /* JSON array of strings */

/* Radial model moment table: kind in {"drury-arveson", "hardy-ball", "ht",
 * "hardy-disk"}; t_param is the H_t exponent, radius the disc radius. */
cymo_status cymo_model_moments(const char* kind, int nvars, double t_param, double radius,
                               int degree, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CYMO_H */
