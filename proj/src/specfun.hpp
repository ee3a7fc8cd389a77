#pragma once

#include <complex>

namespace gcs {

using cplx = std::complex<double>;

// Log-gamma on the principal branch (cut along the negative real axis).
// Throws std::domain_error at the poles (nonpositive real integers).
cplx log_gamma(cplx x);

// Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1. Requires k >= 0.
cplx pochhammer(cplx x, int k);

// Physicists' Hermite polynomial H_n(u) by three-term recursion.
double hermite(int n, double u);

// Generalized Laguerre polynomial L_n^{(alpha)}(y) for real alpha.
// Negative integer alpha = -r with 1 <= r <= n is reduced to a positive-order
// polynomial via laguerre_negative_order; other alpha (including negative
// integer r > n) use the forward degree recursion / finite series, which
// remain valid there.
double laguerre(int n, double alpha, double y);

// L_n^{(-r)}(t) = (-t)^r ((n-r)!/n!) L_{n-r}^{(r)}(t). Requires 1 <= r <= n.
double laguerre_negative_order(int n, int r, double t);

// Charlier polynomial C_n(u; a) = n! (-a)^{-n} L_n^{(u-n)}(a). Requires a > 0.
double charlier(int n, double u, double a);

// Complex Hermite polynomial
//   H_{m,s}(z, conj z) = sum_{j=0}^{min(m,s)} (-1)^j j! C(m,j) C(s,j)
//                        z^{m-j} (conj z)^{s-j}.
cplx complex_hermite(int m, int s, cplx z);

// Terminating hypergeometric sum 3F2(-m, n1, n2; d1, d2; 1).
// Throws std::domain_error if a denominator parameter hits a nonpositive
// integer before the sum terminates.
cplx f32_terminating(int m, cplx n1, cplx n2, cplx d1, cplx d2);

}  // namespace gcs
