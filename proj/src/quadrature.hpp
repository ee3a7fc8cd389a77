#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace gcs {

using cplx = std::complex<double>;

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  double truncation_radius = 10.0;
};

// Thrown when the subdivision budget is exhausted before the requested
// tolerance is met, or an interval can no longer be resolved.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive Gauss-Kronrod (G7, K15) integral of f over [a, b].
// Deterministic: identical inputs produce identical results.
cplx integrate_interval(const std::function<cplx(double)>& f, double a,
                        double b, const QuadratureSpec& spec);

// Integral over [-R, R] with R = spec.truncation_radius.
cplx integrate_line(const std::function<cplx(double)>& f,
                    const QuadratureSpec& spec);

// Integral over [0, R] with R = spec.truncation_radius.
cplx integrate_halfline(const std::function<cplx(double)>& f,
                        const QuadratureSpec& spec);

// Integral of f(w) over the disk |w| <= R in the complex plane,
// d^2 w = r dr dtheta, via nested adaptive polar quadrature.
cplx integrate_plane(const std::function<cplx(cplx)>& f,
                     const QuadratureSpec& spec);

}  // namespace gcs
