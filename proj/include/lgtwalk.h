#ifndef LGTWALK_H
#define LGTWALK_H

/* C interface to the lattice-walk library. All functions return a status
 * code (LGW_OK on success); outputs are passed through pointers. Complex
 * data crosses the boundary as interleaved (re, im) doubles. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  LGW_OK = 0,
  LGW_ERR_FAILURE = 1,  /* an assertion/check failed */
  LGW_ERR_INVALID = 2   /* invalid arguments or configuration */
};

typedef struct lgw_params {
  double a;       /* lattice spacing, > 0 */
  double dt;      /* time step, >= 0 */
  double m;       /* mass */
  double r;       /* Wilson parameter */
  int n_sites;    /* even, >= 4 */
} lgw_params;

typedef struct lgw_operator lgw_operator;

/* Message for the most recent error on this thread. */
const char* lgw_last_error(void);

/* Builds a dense operator for a named scheme. Hamiltonians:
 * "h-leftright", "h-naive", "h-wilson", "h-staggered",
 * "h-gauged-leftright", "h-gauged-naive". Unitary steps:
 * "u-mass", "u-on", "u-int", "u-transport", "dtqw-compact", "naive-dtqw",
 * "wilson-dtqw", "even-odd", "strauch", "gauged-leftright", "gauged-naive".
 * gauge_json is required for gauged schemes (may be NULL otherwise):
 * {"q": real, "A0": [[...]], "A1": [[...]]} with A1 one extra time slice;
 * time_index selects the step within the window. */
int lgw_build_operator(const lgw_params* params, const char* scheme,
                       const char* gauge_json, int time_index,
                       lgw_operator** out);

void lgw_operator_free(lgw_operator* op);

/* Matrix dimension (2 * n_sites). */
int lgw_operator_dim(const lgw_operator* op, int* dim);

/* Copies the matrix into buf as dim*dim*2 doubles, row-major (re, im). */
int lgw_operator_data(const lgw_operator* op, double* buf, size_t buf_len);

/* out = op * in; both are dim*2 interleaved doubles. */
int lgw_operator_apply(const lgw_operator* op, const double* in, double* out);

/* Eigenvalues as dim*2 interleaved doubles, sorted by phase (unitary input)
 * or by real part (Hermitian input). */
int lgw_operator_spectrum(const lgw_operator* op, int unitary, double* buf,
                          size_t buf_len);

/* Max-norm unitarity defect ||U^dag U - I||. */
int lgw_operator_unitarity_error(const lgw_operator* op, double* err);

/* Spectral-norm distance between one transport step of a walk scheme
 * ("u-transport", "dtqw-compact", "naive-dtqw", "wilson-dtqw", "even-odd")
 * and the exact exponential of the matching massless Hamiltonian. */
int lgw_per_step_error(const lgw_params* params, const char* scheme,
                       double* err);

/* Runs a verification suite ("unitarity", "ultralocality", "equivalence",
 * "gauge", "convergence", "symmetry") and returns a JSON report (caller
 * frees with lgw_string_free). *passed is 1 when every check passed.
 * gauge_json may be NULL (the gauge suite then uses a seeded random field). */
int lgw_run_verify_suite(const lgw_params* params, const char* suite,
                         const char* gauge_json, unsigned seed, char** report,
                         int* passed);

/* Real-space mapping coefficients b_N of the Fourier-space equivalence map,
 * as a JSON object. */
int lgw_map_coefficients(const lgw_params* params, int max_offset,
                         int quadrature_points, char** report);

/* Gauge-field observables and covariance checks for a user-supplied field:
 * JSON report with F01/U01 tables and covariance errors. */
int lgw_gauge_check(const lgw_params* params, const char* gauge_json,
                    unsigned seed, char** report, int* passed);

void lgw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LGTWALK_H */
