#include "quadrature.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace gcs {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
const double kXgk[8] = {0.991455371120812639206854697526329,
                        0.949107912342758524526189684047851,
                        0.864864423359769072789712788640926,
                        0.741531185599394439863864773280788,
                        0.586087235467691130294144838258730,
                        0.405845151377397166906606412076961,
                        0.207784955007898467600689403773245,
                        0.000000000000000000000000000000000};

const double kWgk[8] = {0.022935322010529224963732008058970,
                        0.063092092629978553290700663189204,
                        0.104790010322250183839876322541518,
                        0.140653259715525918745189590510238,
                        0.169004726639267902826583426598550,
                        0.190350578064785409913256402421014,
                        0.204432940075298892414161999234649,
                        0.209482141084727828012999174891714};

const double kWg[4] = {0.129484966168869693270611432679082,
                       0.279705391489276667901467771423780,
                       0.381830050505118944950369775488975,
                       0.417959183673469387755102040816327};

struct PairEstimate {
  cplx k15;
  double err;  // |K15 - G7|
};

PairEstimate gauss_kronrod(const std::function<cplx(double)>& f, double a,
                           double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx resk = kWgk[7] * fc;
  cplx resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const cplx f1 = f(c - dx);
    const cplx f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

}  // namespace

cplx integrate_interval(const std::function<cplx(double)>& f, double a,
                        double b, const QuadratureSpec& spec) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double total_len = b - a;
  cplx sum = 0.0;
  int splits = 0;
  // Depth-first worklist; the left half is processed first so the traversal
  // order (and hence rounding) is reproducible.
  std::vector<std::pair<double, double>> work{{a, b}};
  while (!work.empty()) {
    const auto [x0, x1] = work.back();
    work.pop_back();
    const PairEstimate est = gauss_kronrod(f, x0, x1);
    const double frac = (x1 - x0) / total_len;
    const double tol_here =
        std::max(spec.abs_tol, spec.rel_tol * std::abs(est.k15)) * frac;
    if (est.err <= tol_here) {
      sum += est.k15;
      continue;
    }
    if (splits >= spec.max_subdivisions)
      throw QuadratureError("integrate: subdivision budget exhausted");
    if ((x1 - x0) < 1e-14 * (1.0 + std::abs(x0) + std::abs(x1)))
      throw QuadratureError("integrate: interval below resolution limit");
    const double mid = 0.5 * (x0 + x1);
    work.emplace_back(mid, x1);
    work.emplace_back(x0, mid);
    ++splits;
  }
  return sign * sum;
}

cplx integrate_line(const std::function<cplx(double)>& f,
                    const QuadratureSpec& spec) {
  return integrate_interval(f, -spec.truncation_radius,
                            spec.truncation_radius, spec);
}

cplx integrate_halfline(const std::function<cplx(double)>& f,
                        const QuadratureSpec& spec) {
  return integrate_interval(f, 0.0, spec.truncation_radius, spec);
}

cplx integrate_plane(const std::function<cplx(cplx)>& f,
                     const QuadratureSpec& spec) {
  const double two_pi = 2.0 * M_PI;
  auto radial = [&](double r) -> cplx {
    auto angular = [&](double theta) -> cplx {
      return f(cplx(r * std::cos(theta), r * std::sin(theta)));
    };
    return r * integrate_interval(angular, 0.0, two_pi, spec);
  };
  return integrate_interval(radial, 0.0, spec.truncation_radius, spec);
}

}  // namespace gcs
