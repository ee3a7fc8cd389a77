#include "harmonic.hpp"

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace gcs {

namespace {

void check_params(const HarmonicParams& p) {
  if (!(p.omega > 0.0))
    throw std::invalid_argument("harmonic: omega must be positive");
}

// Integration window for xi integrals: the Gaussian factor of Phi is
// centered at sqrt2 Re z / omega with width 1/sqrt(omega); the Hermite
// factor of index K spreads the support by about sqrt(2K+1)/sqrt(omega).
std::pair<double, double> xi_window(double omega, cplx z, int K) {
  const double c = std::sqrt(2.0) * z.real() / omega;
  const double half = (8.0 + std::sqrt(2.0 * K + 1.0)) / std::sqrt(omega);
  return {c - half, c + half};
}

cplx inner_product(const std::function<cplx(double)>& f,
                   const std::function<cplx(double)>& g, double omega, cplx z,
                   int K, const QuadratureSpec& qspec) {
  const auto [lo, hi] = xi_window(omega, z, K);
  return integrate_interval(
      [&](double xi) { return std::conj(f(xi)) * g(xi); }, lo, hi, qspec);
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

double hermite_mode(int n, double u) {
  if (n < 0) throw std::domain_error("hermite_mode: negative index");
  double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
  if (n == 0) return h0;
  double h1 = std::sqrt(2.0) * u * h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = std::sqrt(2.0 / (k + 1.0)) * u * h1 -
                      std::sqrt(static_cast<double>(k) / (k + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double eigenfunction_psi(int n, const HarmonicParams& params, double xi) {
  check_params(params);
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  return sgn * std::pow(params.omega, 0.25) *
         hermite_mode(n, std::sqrt(params.omega) * xi);
}

cplx gcs_phi(const GCSLabel& label, double xi) {
  check_params(label.params);
  if (label.m < 0) throw std::domain_error("gcs_phi: negative index m");
  const double w = label.params.omega;
  const cplx z = label.z;
  const double u = std::sqrt(w) * xi - std::sqrt(2.0 / w) * z.real();
  const double phase = z.real() * z.imag() / w -
                       std::sqrt(2.0) * z.imag() * xi;
  const double sgn = (label.m % 2 == 0) ? 1.0 : -1.0;
  return sgn * std::pow(w, 0.25) * hermite_mode(label.m, u) *
         std::exp(cplx(0.0, phase));
}

cplx gcs_phi_derivative(const GCSLabel& label, double xi) {
  check_params(label.params);
  const double w = label.params.omega;
  const cplx z = label.z;
  const cplx zb = std::conj(z);
  const int m = label.m;
  const double u = std::sqrt(w) * xi - std::sqrt(2.0 / w) * z.real();
  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  const double lognorm = -0.5 * (log_factorial(m) + m * std::log(2.0));
  const cplx pref =
      std::pow(w / M_PI, 0.25) * sgn * std::exp(lognorm);
  const cplx G = -std::norm(z) / (2.0 * w) - zb * zb / (2.0 * w) +
                 std::sqrt(2.0) * zb * xi - 0.5 * w * xi * xi;
  const double Hm = hermite(m, u);
  const double dH =
      (m >= 1) ? 2.0 * m * hermite(m - 1, u) * std::sqrt(w) : 0.0;
  return pref * std::exp(G) *
         ((std::sqrt(2.0) * zb - w * xi) * Hm + dH);
}

cplx gcs_phi_hamiltonian(const GCSLabel& label, double xi) {
  check_params(label.params);
  const double w = label.params.omega;
  const cplx z = label.z;
  const int m = label.m;
  const cplx f = std::sqrt(2.0) * std::conj(z) - w * xi;
  const cplx pm = gcs_phi(label, xi);
  const cplx pm1 =
      (m >= 1) ? gcs_phi({z, m - 1, label.params}, xi) : cplx(0.0, 0.0);
  const cplx pm2 =
      (m >= 2) ? gcs_phi({z, m - 2, label.params}, xi) : cplx(0.0, 0.0);
  const cplx d1 = f * pm - std::sqrt(2.0 * m * w) * pm1;
  const cplx d1m =
      (m >= 1) ? f * pm1 - std::sqrt(2.0 * (m - 1.0) * w) * pm2
               : cplx(0.0, 0.0);
  const cplx d2 = -w * pm + f * d1 - std::sqrt(2.0 * m * w) * d1m;
  return -0.5 * d2 + (0.5 * w * w * xi * xi - 0.5 * w) * pm;
}

cplx expansion_coefficient(const GCSLabel& label, int s) {
  check_params(label.params);
  if (s < 0 || label.m < 0)
    throw std::domain_error("expansion_coefficient: negative index");
  if (label.z == cplx(0.0, 0.0))
    return (label.m == s) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  const double t = std::norm(label.z) / label.params.omega;
  const double theta = std::arg(label.z);
  const int lo = std::min(label.m, s);
  const int hi = std::max(label.m, s);
  const double lg = 0.5 * (log_factorial(lo) - log_factorial(hi)) +
                    0.5 * (hi - lo) * std::log(t);
  const double sgn = (lo % 2 == 0) ? 1.0 : -1.0;
  return sgn * std::exp(lg) *
         std::exp(cplx(0.0, (s - label.m) * theta)) *
         laguerre(lo, static_cast<double>(hi - lo), t);
}

TridiagonalRep harmonic_rep(cplx z, double omega, int len) {
  if (!(omega > 0.0))
    throw std::invalid_argument("harmonic_rep: omega must be positive");
  TridiagonalRep rep;
  for (int n = 0; n < len; ++n) {
    rep.a.push_back(std::norm(z) + n * omega);
    rep.b.push_back(-std::conj(z) * std::sqrt((n + 1.0) * omega));
  }
  return rep;
}

SpectralData harmonic_spectral_data(cplx z, double omega, int s_max) {
  if (!(omega > 0.0))
    throw std::invalid_argument(
        "harmonic_spectral_data: omega must be positive");
  SpectralData data;
  const double t = std::norm(z) / omega;
  double wgt = std::exp(-t);
  for (int s = 0; s <= s_max; ++s) {
    if (s > 0) wgt *= t / static_cast<double>(s);
    data.discrete.emplace_back(s * omega, wgt);
  }
  data.E_min = 0.0;
  return data;
}

cplx matrix_element_quadrature(int n, int m, cplx z,
                               const HarmonicParams& params,
                               const QuadratureSpec& qspec) {
  check_params(params);
  const GCSLabel bra{z, n, params};
  const GCSLabel ket{z, m, params};
  return inner_product([&](double xi) { return gcs_phi(bra, xi); },
                       [&](double xi) { return gcs_phi_hamiltonian(ket, xi); },
                       params.omega, z, std::max(n, m) + 2, qspec);
}

std::pair<double, double> ladder_residuals(const GCSLabel& label,
                                           const QuadratureSpec& qspec) {
  check_params(label.params);
  const double w = label.params.omega;
  const cplx z = label.z;
  const int m = label.m;
  const auto lower = [&](double xi) {
    const cplx A = -gcs_phi_derivative(label, xi) / std::sqrt(2.0) -
                   (w / std::sqrt(2.0)) * xi * gcs_phi(label, xi);
    cplx target = -std::conj(z) * gcs_phi(label, xi);
    if (m >= 1)
      target += std::sqrt(m * w) * gcs_phi({z, m - 1, label.params}, xi);
    return cplx(std::norm(A - target), 0.0);
  };
  const auto raise = [&](double xi) {
    const cplx Ad = gcs_phi_derivative(label, xi) / std::sqrt(2.0) -
                    (w / std::sqrt(2.0)) * xi * gcs_phi(label, xi);
    const cplx target = -z * gcs_phi(label, xi) +
                        std::sqrt((m + 1.0) * w) *
                            gcs_phi({z, m + 1, label.params}, xi);
    return cplx(std::norm(Ad - target), 0.0);
  };
  const auto [lo, hi] = xi_window(w, z, m + 2);
  const double r1 =
      std::sqrt(std::abs(integrate_interval(lower, lo, hi, qspec)));
  const double r2 =
      std::sqrt(std::abs(integrate_interval(raise, lo, hi, qspec)));
  return {r1, r2};
}

std::pair<double, double> variance_check(const GCSLabel& label,
                                         const QuadratureSpec& qspec) {
  check_params(label.params);
  if (label.m != 0)
    throw std::invalid_argument("variance_check: requires m = 0");
  if (label.z == cplx(0.0, 0.0))
    throw std::domain_error("variance_check: degenerate at z = 0 (zero mean)");
  const auto phi = [&](double xi) { return gcs_phi(label, xi); };
  const auto hphi = [&](double xi) { return gcs_phi_hamiltonian(label, xi); };
  const cplx h1 = inner_product(phi, hphi, label.params.omega, label.z, 2,
                                qspec);
  const cplx h2 = inner_product(hphi, hphi, label.params.omega, label.z, 2,
                                qspec);
  return {h1.real(), h2.real()};
}

cplx canonical_cs(cplx z, double xi) {
  const cplx zb = std::conj(z);
  return std::pow(M_PI, -0.25) *
         std::exp(-0.5 * std::norm(z) - 0.5 * zb * zb +
                  std::sqrt(2.0) * zb * xi - 0.5 * xi * xi);
}

cplx bargmann_transform(const std::function<cplx(double)>& phi, cplx z,
                        const QuadratureSpec& qspec) {
  const double c = std::sqrt(2.0) * z.real();
  return integrate_interval(
      [&](double xi) {
        const cplx ker =
            std::pow(M_PI, -0.25) *
            std::exp(-0.5 * z * z + std::sqrt(2.0) * z * xi -
                     0.5 * xi * xi);
        return ker * phi(xi);
      },
      c - qspec.truncation_radius, c + qspec.truncation_radius, qspec);
}

std::pair<cplx, cplx> landau_kernel(cplx z, cplx w, int m, int N) {
  if (N < 1) throw std::invalid_argument("landau_kernel: N must be >= 1");
  const HarmonicParams unit{1.0};
  const GCSLabel lz{z, m, unit};
  const GCSLabel lw{w, m, unit};
  cplx series(0.0, 0.0);
  for (int s = 0; s < N; ++s)
    series += expansion_coefficient(lz, s) *
              std::conj(expansion_coefficient(lw, s));
  series /= M_PI;
  const cplx closed = std::exp(z * std::conj(w)) / M_PI *
                      laguerre(m, 0.0, std::norm(z - w));
  return {series, closed};
}

cplx identity_resolution_entry(int i, int j, int m,
                               const HarmonicParams& params,
                               const QuadratureSpec& qspec) {
  check_params(params);
  const double w = params.omega;
  const double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  const auto integrand = [&](cplx v) {
    const GCSLabel lv{v, m, params};
    return std::exp(-std::norm(v) / w) *
           std::conj(expansion_coefficient(lv, i)) *
           expansion_coefficient(lv, j);
  };
  return sgn * integrate_plane(integrand, qspec) / (M_PI * w);
}

double mode_series_gap(const GCSLabel& label,
                           const std::vector<double>& grid, int S) {
  check_params(label.params);
  if (S < 1) throw std::invalid_argument("mode_series_gap: S must be >= 1");
  const double w = label.params.omega;
  const double norm = std::exp(-std::norm(label.z) / (2.0 * w));
  double worst = 0.0;
  for (double xi : grid) {
    const double u = std::sqrt(w) * xi;
    // Single sweep of the normalized-mode recurrence over s.
    double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
    double h1 = std::sqrt(2.0) * u * h0;
    cplx acc = std::conj(expansion_coefficient(label, 0)) * h0;
    if (S >= 1) acc += std::conj(expansion_coefficient(label, 1)) * h1;
    for (int s = 1; s < S; ++s) {
      const double h2 = std::sqrt(2.0 / (s + 1.0)) * u * h1 -
                        std::sqrt(static_cast<double>(s) / (s + 1.0)) * h0;
      h0 = h1;
      h1 = h2;
      acc += std::conj(expansion_coefficient(label, s + 1)) * h1;
    }
    const cplx series = norm * std::pow(w, 0.25) * acc;
    worst = std::max(worst, std::abs(series - gcs_phi(label, xi)));
  }
  return worst;
}

}  // namespace gcs
