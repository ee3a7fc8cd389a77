/* C interface to the generalized-coherent-state library.
 *
 * All functions return a gcs_status; out-parameters are written only on
 * GCS_OK. A thread-local message describing the most recent failure is
 * available from gcs_last_error(). Handles are opaque and must be released
 * with the matching destroy call.
 */
#ifndef GCS_GCS_H
#define GCS_GCS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcs_status {
  GCS_OK = 0,
  GCS_INVALID_ARGUMENT = 1, /* bad parameter, index, or tolerance name */
  GCS_NUMERICAL = 2,        /* quadrature failed to converge */
  GCS_INTERNAL = 3          /* unexpected failure */
} gcs_status;

typedef struct gcs_model gcs_model;
typedef struct gcs_report gcs_report;

/* Short fixed description of a status code. */
const char* gcs_status_message(gcs_status status);

/* Message of the most recent failure on this thread ("" if none). */
const char* gcs_last_error(void);

/* ---- model construction -------------------------------------------- */

/* Oscillator family at label z = z_re + i z_im and frequency omega > 0. */
gcs_status gcs_model_create_harmonic(double z_re, double z_im, double omega,
                                     gcs_model** out);

/* Morse family with well depth v0 > 0, steepness beta > 0, label z.
 * gamma selects the auxiliary-basis parameter; pass NaN to use the
 * default Re xi_z derived from the label. */
gcs_status gcs_model_create_morse(double z_re, double z_im, double v0,
                                  double beta, double gamma, gcs_model** out);

void gcs_model_destroy(gcs_model* model);

/* ---- pointwise evaluation ------------------------------------------ */

/* Generalized coherent state of index m at coordinate x. */
gcs_status gcs_eval_state(const gcs_model* model, int m, double x,
                          double* out_re, double* out_im);

/* Eigenfunction / bound state of index n at coordinate x (real-valued). */
gcs_status gcs_eval_eigenfunction(const gcs_model* model, int n, double x,
                                  double* out);

/* Annihilation-operator eigenvector at coordinate x (Morse models only). */
gcs_status gcs_eval_glauber(const gcs_model* model, double x, double* out_re,
                            double* out_im);

/* Expansion coefficient: eigenbasis coefficient C_s of state m for
 * oscillator models; auxiliary-basis coefficient Lambda_s (m ignored,
 * pass 0) for Morse models. */
gcs_status gcs_eval_coefficient(const gcs_model* model, int m, int s,
                                double* out_re, double* out_im);

/* ---- operator data -------------------------------------------------- */

/* First len layers of the tridiagonal Hamiltonian representation:
 * a[n] diagonal (real), b[n] subdiagonal entry (n+1, n). */
gcs_status gcs_tridiagonal(const gcs_model* model, size_t len, double* a,
                           double* b_re, double* b_im);

/* Level-m reproducing kernel at (z, w): out4 receives the truncated series
 * (n_trunc >= 1 terms) and the closed form as {ser_re, ser_im, cls_re,
 * cls_im}. Standalone: no model handle needed. */
gcs_status gcs_kernel_landau(double z_re, double z_im, double w_re,
                             double w_im, int m, int n_trunc, double out4[4]);

/* Harmonic-limit study for the Morse-to-oscillator deformation at fixed
 * z and omega: for each of the n beta values, the L2 distance between the
 * Morse state of index m and the limiting oscillator state, plus the
 * aligning phase. Standalone: no model handle needed. */
gcs_status gcs_limit_study(double z_re, double z_im, double omega, int m,
                           const double* betas, size_t n, double* distances,
                           double* angles);

/* ---- verification --------------------------------------------------- */

/* Runs the model's verification suite. overrides is NULL or a
 * semicolon-separated list "check-id=tolerance;..." replacing default
 * tolerances; unknown names fail with GCS_INVALID_ARGUMENT. */
gcs_status gcs_run_verification(const gcs_model* model, int m_max, int n_max,
                                const char* overrides, gcs_report** out);

size_t gcs_report_entry_count(const gcs_report* report);
const char* gcs_report_check_id(const gcs_report* report, size_t i);
const char* gcs_report_statement(const gcs_report* report, size_t i);

/* Numeric fields of entry i. Any pointer may be NULL to skip that field. */
gcs_status gcs_report_entry_values(const gcs_report* report, size_t i,
                                   double* target_re, double* target_im,
                                   double* computed_re, double* computed_im,
                                   double* abs_error, double* tolerance,
                                   int* passed);

size_t gcs_report_total(const gcs_report* report);
size_t gcs_report_passed(const gcs_report* report);
double gcs_report_wall_seconds(const gcs_report* report);

void gcs_report_destroy(gcs_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GCS_GCS_H */
