#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "jmatrix.hpp"
#include "quadrature.hpp"

namespace gcs {

// Morse-well parameters in the unit system of the harmonic module. The
// derived fields fix the dimensionless depth D, the scale K = 2D + 1 of the
// exponential variable y = K e^{-beta x}, the bound-state count, and the
// continuum threshold E_min = beta^2 D^2 / 2 (energies measured from the
// ground state).
struct MorseParams {
  double V0 = 0.0;    // well depth, > 0
  double beta = 0.0;  // inverse length scale, > 0
  double D = 0.0;     // sqrt(2 V0)/beta - 1/2, must be > 0
  double K = 0.0;     // 2 D + 1
  int N_b = 0;        // floor(D) + 1 bound states
  double E_min = 0.0; // beta^2 D^2 / 2
};

// Label of a generalized coherent state of the Morse family. xi_z is the
// derived shape parameter D + sqrt2 z / beta - 1/2; normalizability
// requires Re xi_z > -1/2.
struct MorseGCSLabel {
  cplx z;
  MorseParams params;
  cplx xi_z;
};

// One tridiagonal layer of H = A^dag A in the GCS basis:
// c_n = (beta/sqrt2)(n + sqrt2 z/beta), d_n = (beta/sqrt2)
// sqrt(n (n + 2 Re xi_z)), a_n = |c_n|^2 + d_n^2, b_n = c_n d_{n+1}.
struct MorseTridiag {
  cplx c;
  double d = 0.0;
  double a = 0.0;
  cplx b;
};

// One point of the harmonic-limit study: the well steepness, the
// phase-minimized L2 distance to the limiting oscillator state, and the
// aligning phase angle.
struct LimitPoint {
  double beta = 0.0;
  double distance = 0.0;
  double angle = 0.0;
};

// Populates all derived fields from (V0, beta). Throws invalid_argument for
// non-positive inputs and domain_error when the well is too shallow
// (D <= 0).
MorseParams make_params(double V0, double beta);

// Validates the normalizability condition Re z + beta D / sqrt2 > 0 and
// fills in xi_z. Throws invalid_argument on violation.
MorseGCSLabel make_label(cplx z, const MorseParams& params);

// Exponential variable y = K e^{-beta x}.
double morse_y(const MorseParams& params, double x);

// Shifted well V0 (e^{-2 beta x} - 2 e^{-beta x}) + beta^2 D^2 / 2, whose
// minimum at x = 0 has depth -V0 relative to the dissociation plateau.
double potential(const MorseParams& params, double x);

// Superpotential of the factorization A = -(1/sqrt2) d/dx + W with
// W(x) = (beta / (2 sqrt2)) (y - 2 D); the ground state is annihilated by A.
double factorization_w(const MorseParams& params, double x);

// Normalized bound state of index mu (0 <= mu <= floor(D)):
// sqrt(beta (2D - 2mu) mu! / Gamma(2D - mu + 1)) y^{D-mu} e^{-y/2}
// L_mu^{(2D-2mu)}(y). Throws out_of_range for mu outside the bound range.
double bound_state(const MorseParams& params, int mu, double x);

// H applied analytically to bound_state (second derivative expanded through
// the Laguerre derivative identities).
double bound_state_hamiltonian(const MorseParams& params, int mu, double x);

// Orthonormal auxiliary basis g_n(x) = sqrt(n! beta / Gamma(n + 2 gamma + 1))
// y^{gamma + 1/2} e^{-y/2} L_n^{(2 gamma)}(y). Requires 2 gamma + 1 > 0.
double basis_g(const MorseParams& params, double gamma, int n, double x);

// Ladder coefficients of the auxiliary basis:
// c_n(gamma) = (beta/sqrt2)(n + gamma + 1/2 - D),
// d_n(gamma) = -(beta/sqrt2) sqrt(n (n + 2 gamma)).
double basis_c(const MorseParams& params, double gamma, int n);
double basis_d(const MorseParams& params, double gamma, int n);

// Normalized-to-Q_0 expansion coefficient Q_n of the annihilation-operator
// eigenvector over the g_n basis; satisfies Q_{n+1} = (z - c_n) Q_n / d_{n+1}.
cplx glauber_q(const MorseGCSLabel& label, double gamma, int n);

// Squared inverse of the normalization constant,
// Gamma(2 gamma + 1) Gamma(2 sqrt2 Re z / beta + 2 D) / |Gamma(W)|^2 with
// W = sqrt2 z / beta + gamma + 1/2 + D; equals sum_n |Q_n|^2.
double glauber_norm_inverse_sq(const MorseGCSLabel& label, double gamma);

// Full expansion coefficient Lambda_n = Lambda_0 Q_n.
cplx glauber_coefficient(const MorseGCSLabel& label, double gamma, int n);

// Annihilation-operator eigenvector (A |z) = z |z)) in closed form:
// C_z y^{sqrt2 z / beta + D} e^{-y/2}, unit L2 norm, with the phase of C_z
// fixed to conj(Gamma(W)) / |Gamma(W)|.
cplx glauber_cs(const MorseGCSLabel& label, double gamma, double x);

// Analytic d/dx of glauber_cs.
cplx glauber_cs_derivative(const MorseGCSLabel& label, double gamma, double x);

// Truncated expansion sum_{n<N} Lambda_n g_n(x); converges pointwise to
// glauber_cs on the support of the state.
cplx glauber_series(const MorseGCSLabel& label, double gamma, double x, int N);

// Generalized coherent state phi_m^{z}(x) = (-1)^m
// sqrt(beta m! / Gamma(m + 2 Re xi_z + 1)) y^{xi_z + 1/2} e^{-y/2}
// L_m^{(2 Re xi_z)}(y), evaluated in log space.
cplx gcs_phi_morse(const MorseGCSLabel& label, int m, double x);

// Analytic d/dx of gcs_phi_morse.
cplx gcs_phi_morse_derivative(const MorseGCSLabel& label, int m, double x);

// H applied analytically to gcs_phi_morse.
cplx gcs_phi_morse_hamiltonian(const MorseGCSLabel& label, int m, double x);

// Tridiagonal layer n of H in the GCS basis (see MorseTridiag).
MorseTridiag morse_tridiag(const MorseGCSLabel& label, int n);

// Convenience: the first len layers packed for the recursion machinery.
TridiagonalRep morse_rep(const MorseGCSLabel& label, int len);

// <phi_n | H phi_m> by quadrature with H applied analytically.
cplx morse_matrix_element_quadrature(const MorseGCSLabel& label, int n, int m,
                                     const QuadratureSpec& qspec);

// Integration window [lo, hi] in x outside of which the state of power
// Re xi_z + 1/2 (or D - mu for bound states) and polynomial degree m is
// negligible at the requested number of e-folds below its peak.
std::pair<double, double> morse_window(const MorseParams& params,
                                       double power, int m,
                                       double efolds = 60.0);

// Spectral parameter varsigma(eps) = sqrt(2 eps / beta^2 - D^2) of the
// continuum branch; throws domain_error below E_min.
double varsigma(const MorseParams& params, double eps);

// Recursion polynomial p_m at continuum energy eps >= E_min: terminating
// hypergeometric form p_m(0) q_m(varsigma) with
// q_m = 3F2(-m, -D + i varsigma, -D - i varsigma; g, conj g; 1),
// g = sqrt2 z / beta.
cplx dual_hahn_p(const MorseGCSLabel& label, int m, double eps);

// Same polynomial at the discrete level eps_s = beta^2 s (2D - s)/2
// (0 <= s < N_b), where the analytic continuation makes the middle
// parameters the real pair (s - 2D, -s).
cplx dual_hahn_p_discrete(const MorseGCSLabel& label, int m, int s);

// Value of p_m at zero energy (the normalization point of the family):
// (-1)^m (g)_m sqrt(Gamma(2 Re xi_z + 1) / (m! Gamma(m + 2 Re xi_z + 1))).
cplx dual_hahn_p_zero(const MorseGCSLabel& label, int m);

// Spectral measure closing the polynomial family: N_b discrete weights plus
// a continuum density on [E_min, inf). The continuum integral is evaluated
// in the varsigma parameterization (smooth integrand) truncated at
// varsigma_max.
SpectralData morse_spectral_data(const MorseGCSLabel& label,
                                 double varsigma_max = 40.0);

// For each beta in the (decreasing) path, builds the Morse state phi_m^z at
// V0 = omega^2/(2 beta^2) and returns the phase-minimized L2 distance to
// the oscillator state Phi_m^{-conj z, omega}, together with the aligning
// phase.
std::vector<LimitPoint> harmonic_limit_study(cplx z, double omega, int m,
                                             const std::vector<double>& betas);

}  // namespace gcs
