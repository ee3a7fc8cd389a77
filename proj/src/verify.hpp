#pragma once

#include <complex>
#include <map>
#include <string>

#include "report.hpp"

namespace gcs {

using ToleranceMap = std::map<std::string, double>;

// Runs the full invariant suite of the oscillator GCS family at (z, omega):
// orthonormality, tridiagonal band structure, truncated basis-change
// unitarity, the pointwise derivative identity, and the factorization of the
// recursion polynomials through the discrete-weight closed form. Tolerances
// may be overridden per check_id; unknown ids throw invalid_argument.
// Quadrature failures are recorded as failed entries rather than thrown.
Report run_harmonic_verification(std::complex<double> z, double omega,
                                 int m_max, int n_max,
                                 const ToleranceMap& overrides);

// Runs the full invariant suite of the Morse GCS family at (z, V0, beta)
// with auxiliary-basis parameter gamma (NaN selects the default Re xi_z):
// orthonormality, tridiagonal band + Hermitian pairing, spectral closure,
// the eigenvector relation of the closed-form state, diagonal positivity,
// and monotonicity of the harmonic-limit distances.
Report run_morse_verification(std::complex<double> z, double V0, double beta,
                              double gamma, int m_max, int n_max,
                              const ToleranceMap& overrides);

}  // namespace gcs
