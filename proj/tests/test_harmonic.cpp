#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "harmonic.hpp"
#include "jmatrix.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

using gcs::cplx;
using gcs::GCSLabel;
using gcs::HarmonicParams;
using gcs::QuadratureSpec;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// Literal Gaussian-times-Hermite closed form, written independently of the
// displaced-mode route used inside the library, to pin the exponent algebra.
cplx phi_literal(const GCSLabel& label, double xi) {
  const double w = label.params.omega;
  const cplx zb = std::conj(label.z);
  const int m = label.m;
  const double u = std::sqrt(w) * xi - std::sqrt(2.0 / w) * label.z.real();
  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx G = -std::norm(label.z) / (2.0 * w) - zb * zb / (2.0 * w) +
                 std::sqrt(2.0) * zb * xi - 0.5 * w * xi * xi;
  return std::pow(w / M_PI, 0.25) * sgn /
         std::sqrt(factorial(m) * std::pow(2.0, m)) * gcs::hermite(m, u) *
         std::exp(G);
}

// L2 inner product over a window generous enough for every state involved.
cplx overlap(const std::function<cplx(double)>& f,
             const std::function<cplx(double)>& g, double lo, double hi,
             const QuadratureSpec& qspec) {
  return gcs::integrate_interval(
      [&](double xi) { return std::conj(f(xi)) * g(xi); }, lo, hi, qspec);
}

QuadratureSpec default_quad() {
  QuadratureSpec q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  return q;
}

}  // namespace

TEST_CASE("eigenfunctions: ground state closed form, norms, energies") {
  const QuadratureSpec q = default_quad();
  for (double w : {0.5, 1.0, 2.0}) {
    const HarmonicParams p{w};
    for (double xi : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
      const double expect = std::pow(w / M_PI, 0.25) * std::exp(-0.5 * w * xi * xi);
      CHECK(std::abs(gcs::eigenfunction_psi(0, p, xi) - expect) < 1e-12);
    }
  }
  const HarmonicParams p{1.3};
  for (int n = 0; n <= 10; ++n) {
    const double nrm =
        overlap([&](double xi) { return cplx(gcs::eigenfunction_psi(n, p, xi)); },
                [&](double xi) { return cplx(gcs::eigenfunction_psi(n, p, xi)); },
                -12.0, 12.0, q)
            .real();
    CHECK(std::abs(nrm - 1.0) < 1e-10);
  }
  // Energy expectation through the analytic Hamiltonian route at z = 0.
  for (int n = 0; n <= 6; ++n) {
    const GCSLabel label{cplx(0.0, 0.0), n, p};
    const cplx e = overlap(
        [&](double xi) { return gcs::gcs_phi(label, xi); },
        [&](double xi) { return gcs::gcs_phi_hamiltonian(label, xi); }, -12.0,
        12.0, q);
    CHECK(std::abs(e - cplx(n * p.omega)) < 1e-8);
  }
}

TEST_CASE("gcs_phi: canonical CS at m=0 omega=1, z=0 reduction, norms") {
  const QuadratureSpec q = default_quad();
  const cplx z(0.7, 0.3);
  for (double xi : {-3.0, -1.1, 0.0, 0.4, 2.2}) {
    const GCSLabel label{z, 0, HarmonicParams{1.0}};
    CHECK(std::abs(gcs::gcs_phi(label, xi) - gcs::canonical_cs(z, xi)) < 1e-13);
  }
  for (int m : {0, 1, 4}) {
    const HarmonicParams p{1.7};
    const GCSLabel label{cplx(0.0, 0.0), m, p};
    for (double xi : {-1.5, 0.0, 0.8}) {
      CHECK(std::abs(gcs::gcs_phi(label, xi) -
                     cplx(gcs::eigenfunction_psi(m, p, xi))) < 1e-13);
    }
  }
  for (double w : {0.5, 1.0, 2.0}) {
    for (int m = 0; m <= 8; ++m) {
      const GCSLabel label{z, m, HarmonicParams{w}};
      const double nrm =
          overlap([&](double xi) { return gcs::gcs_phi(label, xi); },
                  [&](double xi) { return gcs::gcs_phi(label, xi); }, -16.0,
                  18.0, q)
              .real();
      CHECK(std::abs(nrm - 1.0) < 1e-10);
    }
  }
  CHECK_THROWS_AS(gcs::gcs_phi(GCSLabel{z, -1, HarmonicParams{1.0}}, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(gcs::gcs_phi(GCSLabel{z, 0, HarmonicParams{-1.0}}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("gcs_phi: displaced-mode route equals literal closed form") {
  for (int m : {0, 1, 2, 5}) {
    for (double w : {0.6, 1.0, 1.9}) {
      for (cplx z : {cplx(0.5, 0.0), cplx(-0.8, 1.1), cplx(1.4, -0.7)}) {
        const GCSLabel label{z, m, HarmonicParams{w}};
        for (double xi : {-2.5, -0.9, 0.0, 1.3, 3.1}) {
          const cplx a = gcs::gcs_phi(label, xi);
          const cplx b = phi_literal(label, xi);
          CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
        }
      }
    }
  }
}

TEST_CASE("gcs_phi: orthonormal family at fixed (z, omega)") {
  const QuadratureSpec q = default_quad();
  const cplx z(0.7, 0.3);
  const double w = 1.3;
  std::vector<GCSLabel> fam;
  for (int m = 0; m <= 8; ++m) fam.push_back(GCSLabel{z, m, HarmonicParams{w}});
  for (int n = 0; n <= 8; ++n) {
    for (int m = n; m <= 8; ++m) {
      const cplx ov =
          overlap([&](double xi) { return gcs::gcs_phi(fam[n], xi); },
                  [&](double xi) { return gcs::gcs_phi(fam[m], xi); }, -14.0,
                  16.0, q);
      const double expect = (n == m) ? 1.0 : 0.0;
      CHECK(std::abs(ov - cplx(expect)) < 1e-9);
    }
  }
}

TEST_CASE("expansion_coefficient: closed-form rows and degenerate point") {
  const double w = 1.3;
  const cplx z(0.7, -0.4);
  // m = 0 row: (z/sqrt w)^s / sqrt(s!).
  for (int s = 0; s <= 10; ++s) {
    const GCSLabel label{z, 0, HarmonicParams{w}};
    const cplx expect = std::pow(z / std::sqrt(w), s) / std::sqrt(factorial(s));
    CHECK(std::abs(gcs::expansion_coefficient(label, s) - expect) <
          1e-12 * (1.0 + std::abs(expect)));
  }
  // s = 0 column: (conj z / sqrt w)^m / sqrt(m!).
  for (int m = 0; m <= 10; ++m) {
    const GCSLabel label{z, m, HarmonicParams{w}};
    const cplx expect =
        std::pow(std::conj(z) / std::sqrt(w), m) / std::sqrt(factorial(m));
    CHECK(std::abs(gcs::expansion_coefficient(label, 0) - expect) <
          1e-12 * (1.0 + std::abs(expect)));
  }
  // Degenerate z = 0 rule.
  for (int m = 0; m <= 3; ++m) {
    for (int s = 0; s <= 3; ++s) {
      const GCSLabel label{cplx(0.0, 0.0), m, HarmonicParams{w}};
      const cplx expect = (m == s) ? 1.0 : 0.0;
      CHECK(std::abs(gcs::expansion_coefficient(label, s) - expect) == 0.0);
    }
  }
  CHECK_THROWS_AS(
      gcs::expansion_coefficient(GCSLabel{z, 0, HarmonicParams{w}}, -1),
      std::domain_error);
}

TEST_CASE("expansion_coefficient: row orthonormality at S=200") {
  for (cplx z : {cplx(0.5, 0.0), cplx(1.2, -1.6), cplx(-1.4, 1.4)}) {
    for (double w : {1.0, 1.3}) {
      const double t = std::norm(z) / w;
      for (int m = 0; m <= 8; ++m) {
        for (int n = m; n <= 8; ++n) {
          cplx acc(0.0, 0.0);
          for (int s = 0; s <= 200; ++s) {
            acc += gcs::expansion_coefficient(GCSLabel{z, m, {w}}, s) *
                   std::conj(gcs::expansion_coefficient(GCSLabel{z, n, {w}}, s));
          }
          acc *= std::exp(-t);
          const double expect = (m == n) ? 1.0 : 0.0;
          CHECK(std::abs(acc - cplx(expect)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("expansion_coefficient: truncated 40x200 unitarity both ways") {
  const cplx z(0.7, 0.3);
  const double w = 1.3;
  const double damp = std::exp(-std::norm(z) / (2.0 * w));
  std::vector<std::vector<cplx>> U(40, std::vector<cplx>(200));
  for (int m = 0; m < 40; ++m)
    for (int s = 0; s < 200; ++s)
      U[m][s] = damp * gcs::expansion_coefficient(GCSLabel{z, m, {w}}, s);
  // Rows of the truncated matrix are orthonormal.
  for (int m = 0; m < 40; m += 7) {
    for (int n = m; n < 40; n += 7) {
      cplx acc(0.0, 0.0);
      for (int s = 0; s < 200; ++s) acc += U[m][s] * std::conj(U[n][s]);
      const double expect = (m == n) ? 1.0 : 0.0;
      CHECK(std::abs(acc - cplx(expect)) < 1e-8);
    }
  }
  // Columns are orthonormal for moderate indices, where the 40-row
  // truncation already carries all the mass of the column vectors.
  for (int s = 0; s <= 25; s += 5) {
    for (int sp = s; sp <= 25; sp += 5) {
      cplx acc(0.0, 0.0);
      for (int m = 0; m < 40; ++m) acc += std::conj(U[m][s]) * U[m][sp];
      const double expect = (s == sp) ? 1.0 : 0.0;
      CHECK(std::abs(acc - cplx(expect)) < 1e-6);
    }
  }
}

TEST_CASE("matrix elements: tridiagonal band and numeric values") {
  const QuadratureSpec q = default_quad();
  const cplx z(0.7, 0.3);
  const double w = 1.3;
  const HarmonicParams p{w};
  CHECK(std::abs(gcs::matrix_element_quadrature(0, 0, z, p, q) -
                 cplx(std::norm(z))) < 1e-8);
  // Row 0 / column 1 of the matrix is -z sqrt(omega); its transpose
  // partner carries the conjugate.
  CHECK(std::abs(gcs::matrix_element_quadrature(0, 1, z, p, q) -
                 (-z * std::sqrt(w))) < 1e-8);
  CHECK(std::abs(gcs::matrix_element_quadrature(1, 0, z, p, q) -
                 (-std::conj(z) * std::sqrt(w))) < 1e-8);
  for (auto [n, m] : {std::pair{0, 2}, {0, 3}, {2, 0}, {1, 4}}) {
    CHECK(std::abs(gcs::matrix_element_quadrature(n, m, z, p, q)) < 1e-8);
  }
  // Whole band against the tridiagonal data.
  const gcs::TridiagonalRep rep = gcs::harmonic_rep(z, w, 5);
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(gcs::matrix_element_quadrature(n, n, z, p, q) -
                   cplx(rep.a[n])) < 1e-8);
    CHECK(std::abs(gcs::matrix_element_quadrature(n + 1, n, z, p, q) -
                   rep.b[n]) < 1e-8);
    CHECK(std::abs(gcs::matrix_element_quadrature(n, n + 1, z, p, q) -
                   std::conj(rep.b[n])) < 1e-8);
  }
}

TEST_CASE("derivative: finite-difference cross-check and first-order identity") {
  const double w = 1.4;
  const cplx z(0.9, -0.6);
  for (int m : {0, 1, 3}) {
    const GCSLabel label{z, m, HarmonicParams{w}};
    for (double xi : {-1.7, -0.2, 0.6, 2.4}) {
      // Independent five-point stencil.
      const double h = 1e-3;
      const cplx fd = (-gcs::gcs_phi(label, xi + 2 * h) +
                       8.0 * gcs::gcs_phi(label, xi + h) -
                       8.0 * gcs::gcs_phi(label, xi - h) +
                       gcs::gcs_phi(label, xi - 2 * h)) /
                      (12.0 * h);
      const cplx an = gcs::gcs_phi_derivative(label, xi);
      CHECK(std::abs(an - fd) < 1e-9 * (1.0 + std::abs(an)));
      // First-order identity: d/dxi Phi_m =
      //   (sqrt2 conj z - omega xi) Phi_m - sqrt(2 m omega) Phi_{m-1}.
      cplx rhs = (std::sqrt(2.0) * std::conj(z) - w * xi) *
                 gcs::gcs_phi(label, xi);
      if (m >= 1)
        rhs -= std::sqrt(2.0 * m * w) *
               gcs::gcs_phi(GCSLabel{z, m - 1, HarmonicParams{w}}, xi);
      CHECK(std::abs(an - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("hamiltonian action: finite-difference cross-check") {
  const double w = 0.8;
  const cplx z(0.4, 0.5);
  for (int m : {0, 2}) {
    const GCSLabel label{z, m, HarmonicParams{w}};
    for (double xi : {-1.2, 0.3, 1.8}) {
      const double h = 1e-3;
      const cplx d2 = (-gcs::gcs_phi(label, xi + 2 * h) +
                       16.0 * gcs::gcs_phi(label, xi + h) -
                       30.0 * gcs::gcs_phi(label, xi) +
                       16.0 * gcs::gcs_phi(label, xi - h) -
                       gcs::gcs_phi(label, xi - 2 * h)) /
                      (12.0 * h * h);
      const cplx hfd = -0.5 * d2 + (0.5 * w * w * xi * xi - 0.5 * w) *
                                       gcs::gcs_phi(label, xi);
      const cplx an = gcs::gcs_phi_hamiltonian(label, xi);
      CHECK(std::abs(an - hfd) < 1e-7 * (1.0 + std::abs(an)));
    }
  }
}

TEST_CASE("ladder actions: residual norms vanish, H = A^dag A on the ground state") {
  const QuadratureSpec q = default_quad();
  const cplx z(0.7, 0.3);
  const double w = 1.3;
  for (int m = 0; m <= 4; ++m) {
    const auto [down, up] =
        gcs::ladder_residuals(GCSLabel{z, m, HarmonicParams{w}}, q);
    CHECK(down < 1e-9);
    CHECK(up < 1e-9);
  }
  // ||A Phi_0||^2 = <Phi_0| A^dag A |Phi_0> = |z|^2.
  const GCSLabel g0{z, 0, HarmonicParams{w}};
  const auto a_phi = [&](double xi) {
    return -gcs::gcs_phi_derivative(g0, xi) / std::sqrt(2.0) -
           (w / std::sqrt(2.0)) * xi * gcs::gcs_phi(g0, xi);
  };
  const cplx nsq = overlap(a_phi, a_phi, -14.0, 16.0, q);
  CHECK(std::abs(nsq - cplx(std::norm(z))) < 1e-8);
}

TEST_CASE("variance_check: mean, second moment, spacing ratio") {
  const QuadratureSpec q = default_quad();
  {
    const cplx z(0.7, 0.3);
    const double w = 1.3;
    const auto [h1, h2] = gcs::variance_check(GCSLabel{z, 0, {w}}, q);
    CHECK(std::abs(h1 - std::norm(z)) < 1e-8);
    CHECK(std::abs(h2 - std::norm(z) * (w + std::norm(z))) < 1e-8);
  }
  {
    const cplx z(1.0, 0.5);
    const double w = 2.0;
    const auto [h1, h2] = gcs::variance_check(GCSLabel{z, 0, {w}}, q);
    const double variance = h2 - h1 * h1;
    CHECK(std::abs(variance / h1 - w) < 1e-8);
  }
  CHECK_THROWS_AS(gcs::variance_check(GCSLabel{cplx(0.3, 0.0), 1, {1.0}}, q),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcs::variance_check(GCSLabel{cplx(0.0, 0.0), 0, {1.0}}, q),
                  std::domain_error);
}

TEST_CASE("canonical_cs: ground profile, norm, Fock expansion phases") {
  const QuadratureSpec q = default_quad();
  for (double xi : {-2.0, 0.0, 1.4}) {
    CHECK(std::abs(gcs::canonical_cs(cplx(0.0, 0.0), xi) -
                   cplx(std::pow(M_PI, -0.25) * std::exp(-0.5 * xi * xi))) <
          1e-13);
  }
  const cplx z(0.6, -0.9);
  const double nrm =
      overlap([&](double xi) { return gcs::canonical_cs(z, xi); },
              [&](double xi) { return gcs::canonical_cs(z, xi); }, -12.0, 12.0,
              q)
          .real();
  CHECK(std::abs(nrm - 1.0) < 1e-10);
  // Fock-basis overlaps carry the eigenfunction sign convention:
  // <psi_n | z> = (-1)^n e^{-|z|^2/2} conj(z)^n / sqrt(n!).
  const HarmonicParams unit{1.0};
  for (int n = 0; n <= 10; ++n) {
    const cplx ov = overlap(
        [&](double xi) { return cplx(gcs::eigenfunction_psi(n, unit, xi)); },
        [&](double xi) { return gcs::canonical_cs(z, xi); }, -12.0, 12.0, q);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx expect = sgn * std::exp(-0.5 * std::norm(z)) *
                        std::pow(std::conj(z), n) / std::sqrt(factorial(n));
    CHECK(std::abs(ov - expect) < 1e-9);
  }
}

TEST_CASE("bargmann_transform: monomial images and linearity") {
  QuadratureSpec q = default_quad();
  q.truncation_radius = 12.0;
  const HarmonicParams unit{1.0};
  // Positive-normalized modes map to z^n/sqrt(n!); the eigenfunction
  // convention contributes its alternating sign on top.
  for (cplx z : {cplx(0.0, 0.0), cplx(0.8, 0.4), cplx(-1.1, 0.9)}) {
    for (int n = 0; n <= 6; ++n) {
      const auto mode = [&](double xi) {
        return cplx(gcs::hermite_mode(n, xi));
      };
      const cplx expect = std::pow(z, n) / std::sqrt(factorial(n));
      CHECK(std::abs(gcs::bargmann_transform(mode, z, q) - expect) < 1e-8);
      const auto psi = [&](double xi) {
        return cplx(gcs::eigenfunction_psi(n, unit, xi));
      };
      const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(gcs::bargmann_transform(psi, z, q) - sgn * expect) <
            1e-8);
    }
  }
  // Linearity on a fixed combination.
  const cplx z(0.5, -0.7);
  const cplx alpha(0.3, 1.1), beta(-0.8, 0.2);
  const auto combo = [&](double xi) {
    return alpha * gcs::eigenfunction_psi(0, unit, xi) +
           beta * gcs::eigenfunction_psi(1, unit, xi);
  };
  const auto p0 = [&](double xi) {
    return cplx(gcs::eigenfunction_psi(0, unit, xi));
  };
  const auto p1 = [&](double xi) {
    return cplx(gcs::eigenfunction_psi(1, unit, xi));
  };
  const cplx lhs = gcs::bargmann_transform(combo, z, q);
  const cplx rhs = alpha * gcs::bargmann_transform(p0, z, q) +
                   beta * gcs::bargmann_transform(p1, z, q);
  CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("landau_kernel: closed forms, series convergence, frozen value") {
  // m = 0 closed form is pi^{-1} e^{z conj w}.
  {
    const cplx z(0.4, 0.9), w(-0.3, 0.5);
    const auto [ser, cls] = gcs::landau_kernel(z, w, 0, 1);
    CHECK(std::abs(cls - std::exp(z * std::conj(w)) / M_PI) < 1e-13);
    (void)ser;
  }
  // Diagonal z = w: closed form is pi^{-1} e^{|z|^2} for every m.
  for (int m : {0, 2, 5}) {
    const cplx z(0.8, -0.6);
    const auto [ser, cls] = gcs::landau_kernel(z, z, m, 1);
    CHECK(std::abs(cls - std::exp(std::norm(z)) / M_PI) < 1e-12);
    (void)ser;
  }
  // Truncated series against the closed form.
  for (int m = 0; m <= 4; ++m) {
    for (auto [z, w] : {std::pair{cplx(0.3, 0.2), cplx(-0.7, 1.1)},
                        {cplx(1.5, 0.0), cplx(0.0, -1.5)},
                        {cplx(-1.0, -1.0), cplx(0.9, 0.8)}}) {
      const auto [ser, cls] = gcs::landau_kernel(z, w, m, 300);
      CHECK(std::abs(ser - cls) < 1e-8 * std::abs(cls));
    }
  }
  // Frozen high-precision value of the Gaussian-damped kernel at m = 3.
  {
    const cplx z(0.3, 0.2), w(-0.7, 1.1);
    const auto [ser, cls] = gcs::landau_kernel(z, w, 3, 400);
    const cplx frozen(-0.057878802177480615597, 0.029400457673755177352);
    const double damp = std::exp(-0.5 * (std::norm(z) + std::norm(w)));
    CHECK(std::abs(cls * damp - frozen) < 1e-12);
    CHECK(std::abs(ser * damp - frozen) < 1e-10);
  }
  CHECK_THROWS_AS(gcs::landau_kernel(cplx(0.1, 0.1), cplx(0.2, 0.0), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("identity resolution: Kronecker entries independent of m") {
  QuadratureSpec q;
  q.abs_tol = 1e-5;
  q.rel_tol = 1e-5;
  q.truncation_radius = 6.0;
  const HarmonicParams unit{1.0};
  CHECK(std::abs(gcs::identity_resolution_entry(0, 0, 0, unit, q) -
                 cplx(1.0)) < 1e-4);
  CHECK(std::abs(gcs::identity_resolution_entry(0, 1, 0, unit, q)) < 1e-4);
  CHECK(std::abs(gcs::identity_resolution_entry(1, 1, 2, unit, q) -
                 cplx(1.0)) < 1e-4);
}

TEST_CASE("mode series: truncated expansion converges to the closed form") {
  std::vector<double> grid;
  for (double xi = -4.0; xi <= 4.0; xi += 0.5) grid.push_back(xi);
  for (cplx z : {cplx(0.5, 0.0), cplx(1.0, 0.8), cplx(-1.2, 0.3)}) {
    CHECK(gcs::mode_series_gap(GCSLabel{z, 0, {1.0}}, grid, 150) < 1e-9);
    for (int m = 1; m <= 5; ++m) {
      CHECK(gcs::mode_series_gap(GCSLabel{z, m, {1.0}}, grid, 150) < 1e-8);
    }
  }
  CHECK_THROWS_AS(gcs::mode_series_gap(GCSLabel{cplx(0.5, 0.0), 0, {1.0}},
                                           grid, 0),
                  std::invalid_argument);
}

TEST_CASE("recursion polynomials on the oscillator data factor through charlier") {
  const cplx z(0.8, 0.4);
  const double w = 1.0;
  const double t = std::norm(z) / w;
  const gcs::TridiagonalRep rep = gcs::harmonic_rep(z, w, 8);
  for (int s = 0; s <= 9; ++s) {
    const auto p = gcs::recursion_polynomials(rep, s * w, 7);
    for (int n = 0; n <= 6; ++n) {
      const cplx expect = std::pow(std::conj(z) / std::sqrt(w), n) *
                          gcs::charlier(n, static_cast<double>(s), t) /
                          std::sqrt(factorial(n));
      CHECK(std::abs(p[n] - expect) <= 1e-9 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("spectral data: Poisson weights close the polynomial family") {
  const cplx z(0.7, 0.3);
  const double w = 1.3;
  const gcs::SpectralData data = gcs::harmonic_spectral_data(z, w, 200);
  CHECK(data.E_min == 0.0);
  double mass = 0.0;
  for (const auto& [E, W] : data.discrete) {
    (void)E;
    mass += W;
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);
  const gcs::TridiagonalRep rep = gcs::harmonic_rep(z, w, 8);
  const QuadratureSpec q = default_quad();
  const auto polys = [&](int n, double E) {
    return gcs::recursion_polynomials(rep, E, 7)[n];
  };
  for (int n = 0; n <= 6; ++n) {
    for (int m = n; m <= 6; ++m) {
      const cplx val = gcs::closure_check(data, polys, n, m, q);
      const double expect = (n == m) ? 1.0 : 0.0;
      CHECK(std::abs(val - cplx(expect)) < 1e-10);
    }
  }
}
