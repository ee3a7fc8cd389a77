#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "quadrature.hpp"

namespace gcs {

// Hermitian tridiagonal representation of a Hamiltonian in an orthonormal
// basis. a[n] is the real diagonal entry (n, n); b[n] is the subdiagonal
// entry (n+1, n) — equal to c_n conj(d_{n+1}) when the representation comes
// from shift coefficients — and the superdiagonal entry (n, n+1) is
// conj(b[n]).
struct TridiagonalRep {
  std::vector<double> a;
  std::vector<cplx> b;
};

// Forward-shift coefficients: A phi_n = c_n phi_n + d_n phi_{n-1}, d_0 = 0.
// The three-term data only determine |c_n| and |d_n|; phases_known is false
// when the values carry no phase information (moduli stored as nonnegative
// reals).
struct ShiftCoefficients {
  std::vector<cplx> c;
  std::vector<cplx> d;
  bool phases_known = true;
};

// Spectral decomposition data for the closure relation: point spectrum with
// weights, plus an optional continuum described by a density and a weighted
// integral callback (which may substitute variables internally for endpoint
// regularity).
struct SpectralData {
  std::vector<std::pair<double, double>> discrete;  // (E_mu, Omega_mu)
  double E_min = 0.0;
  std::function<double(double)> density;  // Omega(E) for E > E_min; may be null
  // Returns \int_{E_min}^infty g(E) Omega(E) dE; null when purely discrete.
  std::function<cplx(const std::function<cplx(double)>&,
                     const QuadratureSpec&)>
      continuum_integral;
};

// Dense row-major N x N finite section of the tridiagonal representation.
std::vector<cplx> finite_section(const TridiagonalRep& rep, int N);

// Recursion polynomials p_0 .. p_{N-1} at real energy E:
//   p_0 = 1,  E p_n = b_{n-1} p_{n-1} + a_n p_n + conj(b_n) p_{n+1}.
std::vector<cplx> recursion_polynomials(const TridiagonalRep& rep, double E,
                                        int N);

// Recovers shift-coefficient moduli from the polynomials at E = 0:
//   |c_n|^2 = -conj(b_n) p_{n+1}(0) / p_n(0),
//   |d_{n+1}|^2 = -b_n p_n(0) / p_{n+1}(0).
// Throws if a modulus-squared comes out negative or non-real beyond
// tolerance (the representation is not that of a positive A^dagger A).
ShiftCoefficients shift_from_polys(const TridiagonalRep& rep,
                                   const std::vector<cplx>& p_at_zero);

// Generates c_n, d_n from shape invariance:
//   c_n^2 = c_0^2 + (n d_1^2 - eps_n),  d_n^2 = n d_1^2 + (n eps_1 - eps_n),
// with complex square roots fixed by continuity in n starting from the given
// c_0 (and d_1). Requires spectrum(0) = 0.
ShiftCoefficients shape_invariant_shift(cplx c0, cplx d1,
                                        const std::function<double(int)>& spectrum,
                                        int N);

// Normalized discrete superposition sum_n D_n basis_n / sqrt(sum |D_n|^2).
std::vector<cplx> gcs_superpose_discrete(
    const std::vector<cplx>& coeffs,
    const std::vector<std::vector<cplx>>& basis);

// Evaluates the closure combination
//   sum_mu Omega_mu p_n(E_mu) conj(p_m(E_mu))
//     + \int Omega(E) p_n(E) conj(p_m(E)) dE,
// which equals delta_{n,m} for consistent spectral data.
cplx closure_check(const SpectralData& data,
                   const std::function<cplx(int, double)>& polys, int n, int m,
                   const QuadratureSpec& qspec);

}  // namespace gcs
