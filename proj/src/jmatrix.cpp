#include "jmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace gcs {

std::vector<cplx> finite_section(const TridiagonalRep& rep, int N) {
  if (N < 1) throw std::invalid_argument("finite_section: N must be >= 1");
  if (static_cast<int>(rep.a.size()) < N ||
      static_cast<int>(rep.b.size()) < N - 1)
    throw std::invalid_argument("finite_section: rep shorter than N");
  std::vector<cplx> M(static_cast<size_t>(N) * N, cplx(0.0, 0.0));
  for (int n = 0; n < N; ++n) M[n * N + n] = rep.a[n];
  for (int n = 0; n + 1 < N; ++n) {
    M[(n + 1) * N + n] = rep.b[n];
    M[n * N + (n + 1)] = std::conj(rep.b[n]);
  }
  return M;
}

std::vector<cplx> recursion_polynomials(const TridiagonalRep& rep, double E,
                                        int N) {
  if (N < 1)
    throw std::invalid_argument("recursion_polynomials: N must be >= 1");
  if (static_cast<int>(rep.a.size()) < N - 1 ||
      static_cast<int>(rep.b.size()) < N - 1)
    throw std::invalid_argument("recursion_polynomials: rep shorter than N");
  std::vector<cplx> p(N);
  p[0] = 1.0;
  for (int n = 0; n + 1 < N; ++n) {
    if (rep.b[n] == cplx(0.0, 0.0))
      throw std::domain_error("recursion_polynomials: vanishing coupling b_n");
    const cplx prev = (n == 0) ? cplx(0.0, 0.0) : rep.b[n - 1] * p[n - 1];
    p[n + 1] = ((E - rep.a[n]) * p[n] - prev) / std::conj(rep.b[n]);
  }
  return p;
}

ShiftCoefficients shift_from_polys(const TridiagonalRep& rep,
                                   const std::vector<cplx>& p_at_zero) {
  const int N = static_cast<int>(p_at_zero.size());
  if (N < 2)
    throw std::invalid_argument("shift_from_polys: need at least p_0, p_1");
  if (static_cast<int>(rep.b.size()) < N - 1)
    throw std::invalid_argument("shift_from_polys: rep shorter than polys");
  ShiftCoefficients out;
  out.phases_known = false;
  out.d.assign(N, cplx(0.0, 0.0));
  out.c.assign(N - 1, cplx(0.0, 0.0));
  for (int n = 0; n + 1 < N; ++n) {
    if (p_at_zero[n] == cplx(0.0, 0.0) || p_at_zero[n + 1] == cplx(0.0, 0.0))
      throw std::domain_error("shift_from_polys: p_n(0) vanishes");
    const cplx c2 = -std::conj(rep.b[n]) * p_at_zero[n + 1] / p_at_zero[n];
    const cplx d2 = -rep.b[n] * p_at_zero[n] / p_at_zero[n + 1];
    const double scale_c = std::max(1.0, std::abs(c2));
    const double scale_d = std::max(1.0, std::abs(d2));
    if (std::abs(c2.imag()) > 1e-8 * scale_c || c2.real() < -1e-8 * scale_c)
      throw std::runtime_error(
          "shift_from_polys: |c_n|^2 not real nonnegative");
    if (std::abs(d2.imag()) > 1e-8 * scale_d || d2.real() < -1e-8 * scale_d)
      throw std::runtime_error(
          "shift_from_polys: |d_n|^2 not real nonnegative");
    out.c[n] = std::sqrt(std::max(0.0, c2.real()));
    out.d[n + 1] = std::sqrt(std::max(0.0, d2.real()));
  }
  return out;
}

ShiftCoefficients shape_invariant_shift(cplx c0, cplx d1,
                                        const std::function<double(int)>& spectrum,
                                        int N) {
  if (N < 1)
    throw std::invalid_argument("shape_invariant_shift: N must be >= 1");
  if (std::abs(spectrum(0)) > 1e-12)
    throw std::invalid_argument(
        "shape_invariant_shift: spectrum(0) must vanish");
  ShiftCoefficients out;
  out.c.resize(N);
  out.d.resize(N);
  out.c[0] = c0;
  out.d[0] = 0.0;
  const cplx c0sq = c0 * c0;
  const cplx d1sq = d1 * d1;
  const double e1 = (N > 1) ? spectrum(1) : 0.0;
  for (int n = 1; n < N; ++n) {
    const double en = spectrum(n);
    const cplx csq = c0sq + (static_cast<double>(n) * d1sq - en);
    const cplx dsq =
        static_cast<double>(n) * d1sq + (static_cast<double>(n) * e1 - en);
    // Square-root branch by continuity in n: pick the root nearer the
    // previous coefficient.
    const cplx cr = std::sqrt(csq);
    out.c[n] =
        (std::abs(cr - out.c[n - 1]) <= std::abs(-cr - out.c[n - 1])) ? cr
                                                                      : -cr;
    if (n == 1) {
      out.d[1] = d1;
    } else {
      const cplx dr = std::sqrt(dsq);
      out.d[n] =
          (std::abs(dr - out.d[n - 1]) <= std::abs(-dr - out.d[n - 1])) ? dr
                                                                        : -dr;
    }
  }
  return out;
}

std::vector<cplx> gcs_superpose_discrete(
    const std::vector<cplx>& coeffs,
    const std::vector<std::vector<cplx>>& basis) {
  if (coeffs.empty() || basis.size() < coeffs.size())
    throw std::invalid_argument(
        "gcs_superpose_discrete: basis shorter than coefficients");
  double wd = 0.0;
  for (const cplx& c : coeffs) wd += std::norm(c);
  if (wd <= 0.0)
    throw std::invalid_argument(
        "gcs_superpose_discrete: all coefficients vanish");
  const size_t len = basis[0].size();
  std::vector<cplx> out(len, cplx(0.0, 0.0));
  const double inv = 1.0 / std::sqrt(wd);
  for (size_t n = 0; n < coeffs.size(); ++n) {
    if (basis[n].size() != len)
      throw std::invalid_argument(
          "gcs_superpose_discrete: basis vectors of unequal length");
    for (size_t g = 0; g < len; ++g) out[g] += coeffs[n] * basis[n][g];
  }
  for (cplx& v : out) v *= inv;
  return out;
}

cplx closure_check(const SpectralData& data,
                   const std::function<cplx(int, double)>& polys, int n, int m,
                   const QuadratureSpec& qspec) {
  cplx acc(0.0, 0.0);
  for (const auto& [E, W] : data.discrete)
    acc += W * polys(n, E) * std::conj(polys(m, E));
  if (data.continuum_integral) {
    acc += data.continuum_integral(
        [&](double E) { return polys(n, E) * std::conj(polys(m, E)); },
        qspec);
  }
  return acc;
}

}  // namespace gcs
