#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "jmatrix.hpp"
#include "quadrature.hpp"

namespace gcs {

struct HarmonicParams {
  double omega = 1.0;  // requires omega > 0
};

// Label (z, m) of a generalized coherent state of the oscillator family.
struct GCSLabel {
  cplx z;
  int m = 0;
  HarmonicParams params;
};

// Normalized Gauss-Hermite mode pi^{-1/4} (2^n n!)^{-1/2} H_n(u) e^{-u^2/2}
// (positive leading coefficient), via the stable normalized recurrence.
double hermite_mode(int n, double u);

// Oscillator eigenfunction psi_n(xi) = (-1)^n omega^{1/4} times the
// normalized mode at u = sqrt(omega) xi (the alternating phase is part of
// the eigenfunction convention used throughout).
double eigenfunction_psi(int n, const HarmonicParams& params, double xi);

// Generalized coherent state Phi_m^{z, omega}(xi): a displaced m-th mode
//   (-1)^m omega^{1/4} mode_m(sqrt(omega) xi - sqrt(2/omega) Re z)
//     * exp(i (Re z Im z / omega - sqrt2 Im z xi)),
// equal to the Gaussian-times-Hermite closed form with normalization
// e^{-|z|^2/(2 omega)}.
cplx gcs_phi(const GCSLabel& label, double xi);

// Analytic d/dxi of gcs_phi by the chain rule on the product closed form
// (independent of the displaced-mode route above, so the two can be checked
// against each other and against the first-derivative identity).
cplx gcs_phi_derivative(const GCSLabel& label, double xi);

// H Phi_m with H = -1/2 d^2/dxi^2 + omega^2 xi^2/2 - omega/2, the second
// derivative applied analytically through the first-derivative identity.
cplx gcs_phi_hamiltonian(const GCSLabel& label, double xi);

// Expansion coefficient C_s^{(m, omega)}(z): phase-Laguerre closed form
//   (-1)^{min} sqrt(min!/max!) (|z|^2/omega)^{|m-s|/2}
//     e^{i (s-m) arg z} L_min^{(|m-s|)}(|z|^2/omega),
// with the z = 0 limit defined as delta_{m,s}.
cplx expansion_coefficient(const GCSLabel& label, int s);

// Tridiagonal data of H in the GCS basis: diagonal a_n = |z|^2 + n omega,
// subdiagonal b_n = -conj(z) sqrt((n+1) omega).
TridiagonalRep harmonic_rep(cplx z, double omega, int len);

// Point spectrum E_s = s omega with weights e^{-t} t^s / s!, t = |z|^2/omega
// (no continuum), truncated at s_max.
SpectralData harmonic_spectral_data(cplx z, double omega, int s_max);

// <Phi_n | H Phi_m> by quadrature with H applied analytically.
cplx matrix_element_quadrature(int n, int m, cplx z,
                               const HarmonicParams& params,
                               const QuadratureSpec& qspec);

// L2 norms of A Phi_m - (-conj(z) Phi_m + sqrt(m omega) Phi_{m-1}) and
// Adag Phi_m - (-z Phi_m + sqrt((m+1) omega) Phi_{m+1}), with
// A = -(1/sqrt2) d/dxi - (omega/sqrt2) xi applied analytically.
std::pair<double, double> ladder_residuals(const GCSLabel& label,
                                           const QuadratureSpec& qspec);

// (<H>, <H^2>) in the state Phi_0; contract <H> = |z|^2,
// <H^2> = |z|^2 (omega + |z|^2). Requires m = 0 and z != 0.
std::pair<double, double> variance_check(const GCSLabel& label,
                                         const QuadratureSpec& qspec);

// Canonical coherent state (omega = 1 convention):
// pi^{-1/4} e^{-|z|^2/2} exp(-conj(z)^2/2 + sqrt2 conj(z) xi - xi^2/2).
cplx canonical_cs(cplx z, double xi);

// Holomorphic integral transform
//   B0[phi](z) = \int pi^{-1/4} exp(-z^2/2 + sqrt2 z xi - xi^2/2) phi(xi) dxi
// over a window of half-width qspec.truncation_radius centered at
// sqrt2 Re z.
cplx bargmann_transform(const std::function<cplx(double)>& phi, cplx z,
                        const QuadratureSpec& qspec);

// Level-m reproducing kernel: returns (truncated series
// pi^{-1} sum_{s<N} C_s^{(m,1)}(z) conj(C_s^{(m,1)}(w)), closed form
// pi^{-1} e^{z conj(w)} L_m(|z-w|^2)); the two agree as N grows.
std::pair<cplx, cplx> landau_kernel(cplx z, cplx w, int m, int N);

// Entry <psi_i| M |psi_j> of the operator
//   M = (pi omega)^{-1} \int d^2v |Phi_m^{v,omega}><Phi_m^{v,omega}|
// over the disk |v| <= qspec.truncation_radius; contract: delta_{i,j}
// independent of m.
cplx identity_resolution_entry(int i, int j, int m,
                               const HarmonicParams& params,
                               const QuadratureSpec& qspec);

// Max absolute gap over the xi grid between the truncated mode series
// e^{-|z|^2/(2 omega)} sum_{s<=S} conj(C_s^{(m,omega)}) h_s(xi) and the
// closed form gcs_phi.
double mode_series_gap(const GCSLabel& label,
                           const std::vector<double>& grid, int S);

}  // namespace gcs
