#include "morse.hpp"

#include <cmath>
#include <stdexcept>

#include "harmonic.hpp"
#include "specfun.hpp"

namespace gcs {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// sqrt2 z / beta, the dimensionless displacement entering every closed form.
cplx g_of(const MorseGCSLabel& label) {
  return kSqrt2 * label.z / label.params.beta;
}

// 2 Re xi_z + 1, the order parameter of the Laguerre weight.
double h_of(const MorseGCSLabel& label) { return 2.0 * label.xi_z.real() + 1.0; }

void check_gamma(double gamma) {
  if (!(2.0 * gamma + 1.0 > 0.0))
    throw std::domain_error("morse: requires 2 gamma + 1 > 0");
}

// H applied to sign * exp(lognorm) y^p e^{-y/2} L_m^{(alpha)}(y) with the
// second x-derivative expanded through d/dx = -beta y d/dy and the Laguerre
// derivative identity.
cplx apply_hamiltonian(const MorseParams& params, cplx p, double alpha, int m,
                       double lognorm, double sign, double x) {
  const double beta = params.beta;
  const double y = morse_y(params, x);
  const double a0 = laguerre(m, alpha, y);
  const double a1 = (m >= 1) ? -laguerre(m - 1, alpha + 1.0, y) : 0.0;
  const double a2 = (m >= 2) ? laguerre(m - 2, alpha + 2.0, y) : 0.0;
  const cplx B = (p - 0.5 * y) * a0 + y * a1;
  const cplx Bp = -0.5 * a0 + (p + 1.0 - 0.5 * y) * a1 + y * a2;
  const cplx core = sign * std::exp(lognorm + p * std::log(y) - 0.5 * y);
  const double V =
      params.V0 * (y * y / (params.K * params.K) - 2.0 * y / params.K) +
      params.E_min;
  return core *
         (-0.5 * beta * beta * ((p - 0.5 * y) * B + y * Bp) + V * a0);
}

// Log-space normalization of the generalized coherent state of index m.
double phi_lognorm(const MorseGCSLabel& label, int m) {
  const double h = h_of(label);
  return 0.5 * (std::log(label.params.beta) + std::lgamma(m + 1.0) -
                std::lgamma(m + h));
}

// Log-space normalization of bound state mu.
double bound_lognorm(const MorseParams& params, int mu) {
  return 0.5 * (std::log(params.beta) + std::log(2.0 * (params.D - mu)) +
                std::lgamma(mu + 1.0) - std::lgamma(2.0 * params.D - mu + 1.0));
}

}  // namespace

MorseParams make_params(double V0, double beta) {
  if (!(V0 > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("make_params: V0 and beta must be positive");
  MorseParams p;
  p.V0 = V0;
  p.beta = beta;
  p.D = std::sqrt(2.0 * V0) / beta - 0.5;
  if (!(p.D > 0.0))
    throw std::domain_error("make_params: well too shallow (D <= 0)");
  p.K = 2.0 * p.D + 1.0;
  p.N_b = static_cast<int>(std::floor(p.D)) + 1;
  p.E_min = 0.5 * beta * beta * p.D * p.D;
  return p;
}

MorseGCSLabel make_label(cplx z, const MorseParams& params) {
  if (!(z.real() + params.beta * params.D / kSqrt2 > 0.0))
    throw std::invalid_argument(
        "make_label: normalizability requires Re z + beta D / sqrt2 > 0");
  MorseGCSLabel label;
  label.z = z;
  label.params = params;
  label.xi_z = params.D + kSqrt2 * z / params.beta - 0.5;
  return label;
}

double morse_y(const MorseParams& params, double x) {
  return params.K * std::exp(-params.beta * x);
}

double potential(const MorseParams& params, double x) {
  const double e = std::exp(-params.beta * x);
  return params.V0 * (e * e - 2.0 * e) + params.E_min;
}

double factorization_w(const MorseParams& params, double x) {
  return params.beta / (2.0 * kSqrt2) * (morse_y(params, x) - 2.0 * params.D);
}

double bound_state(const MorseParams& params, int mu, double x) {
  if (mu < 0 || mu > static_cast<int>(std::floor(params.D)))
    throw std::out_of_range("bound_state: index outside the bound spectrum");
  const double y = morse_y(params, x);
  const double p = params.D - mu;
  return std::exp(bound_lognorm(params, mu) + p * std::log(y) - 0.5 * y) *
         laguerre(mu, 2.0 * p, y);
}

double bound_state_hamiltonian(const MorseParams& params, int mu, double x) {
  if (mu < 0 || mu > static_cast<int>(std::floor(params.D)))
    throw std::out_of_range("bound_state: index outside the bound spectrum");
  const double p = params.D - mu;
  return apply_hamiltonian(params, cplx(p), 2.0 * p, mu,
                           bound_lognorm(params, mu), 1.0, x)
      .real();
}

double basis_g(const MorseParams& params, double gamma, int n, double x) {
  check_gamma(gamma);
  if (n < 0) throw std::domain_error("basis_g: negative index");
  const double y = morse_y(params, x);
  const double lognorm =
      0.5 * (std::lgamma(n + 1.0) + std::log(params.beta) -
             std::lgamma(n + 2.0 * gamma + 1.0));
  return std::exp(lognorm + (gamma + 0.5) * std::log(y) - 0.5 * y) *
         laguerre(n, 2.0 * gamma, y);
}

double basis_c(const MorseParams& params, double gamma, int n) {
  return params.beta / kSqrt2 * (n + gamma + 0.5 - params.D);
}

double basis_d(const MorseParams& params, double gamma, int n) {
  return -params.beta / kSqrt2 * std::sqrt(n * (n + 2.0 * gamma));
}

cplx glauber_q(const MorseGCSLabel& label, double gamma, int n) {
  check_gamma(gamma);
  if (n < 0) throw std::domain_error("glauber_q: negative index");
  const cplx w = label.xi_z - gamma;
  cplx q(1.0, 0.0);
  for (int j = 0; j < n; ++j)
    q *= (static_cast<double>(j) - w) /
         std::sqrt((j + 1.0) * (j + 2.0 * gamma + 1.0));
  return q;
}

double glauber_norm_inverse_sq(const MorseGCSLabel& label, double gamma) {
  check_gamma(gamma);
  const cplx W = g_of(label) + gamma + 0.5 + label.params.D;
  const double big =
      2.0 * kSqrt2 * label.z.real() / label.params.beta + 2.0 * label.params.D;
  return std::exp(std::lgamma(2.0 * gamma + 1.0) + std::lgamma(big) -
                  2.0 * log_gamma(W).real());
}

cplx glauber_coefficient(const MorseGCSLabel& label, double gamma, int n) {
  return glauber_q(label, gamma, n) /
         std::sqrt(glauber_norm_inverse_sq(label, gamma));
}

cplx glauber_cs(const MorseGCSLabel& label, double gamma, double x) {
  check_gamma(gamma);
  const cplx W = g_of(label) + gamma + 0.5 + label.params.D;
  const double y = morse_y(label.params, x);
  const double h = h_of(label);
  const cplx expo = 0.5 * (std::log(label.params.beta) - std::lgamma(h)) +
                    (label.xi_z + 0.5) * std::log(y) - 0.5 * y -
                    cplx(0.0, log_gamma(W).imag());
  return std::exp(expo);
}

cplx glauber_cs_derivative(const MorseGCSLabel& label, double gamma,
                           double x) {
  const double y = morse_y(label.params, x);
  return label.params.beta * (0.5 * y - label.xi_z - 0.5) *
         glauber_cs(label, gamma, x);
}

cplx glauber_series(const MorseGCSLabel& label, double gamma, double x,
                    int N) {
  check_gamma(gamma);
  if (N < 1) throw std::invalid_argument("glauber_series: N must be >= 1");
  const double y = morse_y(label.params, x);
  const cplx w = label.xi_z - gamma;
  const double tg = 2.0 * gamma;
  // Carry the basis recurrence, its log normalization, and Q_n together.
  const double logbase =
      (gamma + 0.5) * std::log(y) - 0.5 * y + 0.5 * std::log(label.params.beta);
  double l0 = 1.0;                 // L_0^{(2 gamma)}(y)
  double l1 = 1.0 + tg - y;       // L_1^{(2 gamma)}(y)
  cplx q(1.0, 0.0);
  double lognorm = -0.5 * std::lgamma(tg + 1.0);
  cplx acc = q * l0 * std::exp(logbase + 0.5 * std::lgamma(1.0) + lognorm);
  double lag = l0;
  for (int n = 1; n < N; ++n) {
    if (n == 1) {
      lag = l1;
    } else {
      const double l2 =
          ((2.0 * (n - 1.0) + tg + 1.0 - y) * l1 - (n - 1.0 + tg) * l0) /
          static_cast<double>(n);
      l0 = l1;
      l1 = l2;
      lag = l2;
    }
    q *= (static_cast<double>(n - 1) - w) /
         std::sqrt(static_cast<double>(n) * (n + tg));
    const double ln_g =
        logbase + 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + tg + 1.0));
    acc += q * lag * std::exp(ln_g);
  }
  return acc / std::sqrt(glauber_norm_inverse_sq(label, gamma));
}

cplx gcs_phi_morse(const MorseGCSLabel& label, int m, double x) {
  if (m < 0) throw std::domain_error("gcs_phi_morse: negative index");
  const double y = morse_y(label.params, x);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx expo =
      phi_lognorm(label, m) + (label.xi_z + 0.5) * std::log(y) - 0.5 * y;
  return sign * std::exp(expo) * laguerre(m, h_of(label) - 1.0, y);
}

cplx gcs_phi_morse_derivative(const MorseGCSLabel& label, int m, double x) {
  if (m < 0) throw std::domain_error("gcs_phi_morse: negative index");
  const double y = morse_y(label.params, x);
  const double alpha = h_of(label) - 1.0;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx p = label.xi_z + 0.5;
  const double a0 = laguerre(m, alpha, y);
  const double a1 = (m >= 1) ? -laguerre(m - 1, alpha + 1.0, y) : 0.0;
  const cplx core =
      sign * std::exp(phi_lognorm(label, m) + p * std::log(y) - 0.5 * y);
  return -label.params.beta * core * ((p - 0.5 * y) * a0 + y * a1);
}

cplx gcs_phi_morse_hamiltonian(const MorseGCSLabel& label, int m, double x) {
  if (m < 0) throw std::domain_error("gcs_phi_morse: negative index");
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return apply_hamiltonian(label.params, label.xi_z + 0.5, h_of(label) - 1.0,
                           m, phi_lognorm(label, m), sign, x);
}

MorseTridiag morse_tridiag(const MorseGCSLabel& label, int n) {
  if (n < 0) throw std::domain_error("morse_tridiag: negative index");
  const double beta = label.params.beta;
  const double rxi = label.xi_z.real();
  MorseTridiag t;
  t.c = beta / kSqrt2 * (static_cast<double>(n) + g_of(label));
  t.d = beta / kSqrt2 * std::sqrt(n * (n + 2.0 * rxi));
  t.a = std::norm(t.c) + t.d * t.d;
  t.b = t.c * (beta / kSqrt2 * std::sqrt((n + 1.0) * (n + 1.0 + 2.0 * rxi)));
  return t;
}

TridiagonalRep morse_rep(const MorseGCSLabel& label, int len) {
  TridiagonalRep rep;
  for (int n = 0; n < len; ++n) {
    const MorseTridiag t = morse_tridiag(label, n);
    rep.a.push_back(t.a);
    rep.b.push_back(t.b);
  }
  return rep;
}

cplx morse_matrix_element_quadrature(const MorseGCSLabel& label, int n, int m,
                                     const QuadratureSpec& qspec) {
  const auto [lo, hi] = morse_window(
      label.params, label.xi_z.real() + 0.5, std::max(n, m) + 2);
  return integrate_interval(
      [&](double x) {
        return std::conj(gcs_phi_morse(label, n, x)) *
               gcs_phi_morse_hamiltonian(label, m, x);
      },
      lo, hi, qspec);
}

std::pair<double, double> morse_window(const MorseParams& params,
                                       double power, int m, double efolds) {
  const double p = std::max(power, 1.0);
  const double margin = efolds + 8.0 * m;
  double c = 3.0;
  while (p * (std::log(c) - c + 1.0) > -margin) c *= 1.4;
  const double eps = std::exp(-margin / p - 1.0);
  const double y_hi = 2.0 * p * c;
  const double y_lo = 2.0 * p * eps;
  const double lo = std::log(params.K / y_hi) / params.beta;
  const double hi = std::log(params.K / y_lo) / params.beta;
  return {lo, hi};
}

double varsigma(const MorseParams& params, double eps) {
  if (eps < params.E_min)
    throw std::domain_error("varsigma: energy below the continuum threshold");
  return std::sqrt(2.0 * eps / (params.beta * params.beta) -
                   params.D * params.D);
}

cplx dual_hahn_p_zero(const MorseGCSLabel& label, int m) {
  if (m < 0) throw std::domain_error("dual_hahn_p: negative index");
  const double h = h_of(label);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign *
         std::exp(0.5 * (std::lgamma(h) - std::lgamma(m + h)) -
                  0.5 * std::lgamma(m + 1.0)) *
         pochhammer(g_of(label), m);
}

cplx dual_hahn_p(const MorseGCSLabel& label, int m, double eps) {
  const double vs = varsigma(label.params, eps);
  const cplx g = g_of(label);
  const cplx q = f32_terminating(m, cplx(-label.params.D, vs),
                                 cplx(-label.params.D, -vs), g, std::conj(g));
  return dual_hahn_p_zero(label, m) * q;
}

cplx dual_hahn_p_discrete(const MorseGCSLabel& label, int m, int s) {
  if (s < 0 || s >= label.params.N_b)
    throw std::out_of_range("dual_hahn_p_discrete: level index out of range");
  const cplx g = g_of(label);
  // Below the threshold varsigma is imaginary and the middle parameter pair
  // becomes real: (s - 2D, -s).
  const cplx q =
      f32_terminating(m, cplx(s - 2.0 * label.params.D), cplx(-s), g,
                      std::conj(g));
  return dual_hahn_p_zero(label, m) * q;
}

SpectralData morse_spectral_data(const MorseGCSLabel& label,
                                 double varsigma_max) {
  const MorseParams params = label.params;
  const cplx g = g_of(label);
  const double h = h_of(label);
  const double D = params.D;
  SpectralData data;
  for (int s = 0; s < params.N_b; ++s) {
    const double eps = 0.5 * params.beta * params.beta * s * (2.0 * D - s);
    const double logw =
        std::log(2.0 * (D - s)) + 2.0 * log_gamma(g + (2.0 * D - s)).real() +
        2.0 * std::log(std::abs(pochhammer(g, s))) -
        std::lgamma(2.0 * D - s + 1.0) - std::lgamma(h) -
        std::lgamma(s + 1.0);
    data.discrete.emplace_back(eps, std::exp(logw));
  }
  data.E_min = params.E_min;
  const double lognorm =
      -std::log(2.0 * M_PI) - std::lgamma(h) - 2.0 * log_gamma(g).real();
  const auto weight_vs = [g, D, lognorm](double vs) {
    if (!(vs > 0.0)) return 0.0;
    const double lg = log_gamma(cplx(-D, vs)).real() +
                      log_gamma(D + g + cplx(0.0, vs)).real() +
                      log_gamma(D + std::conj(g) + cplx(0.0, vs)).real() -
                      log_gamma(cplx(0.0, 2.0 * vs)).real();
    return std::exp(2.0 * lg + lognorm);
  };
  const double beta = params.beta;
  data.density = [weight_vs, params](double eps) {
    if (eps <= params.E_min) return 0.0;
    const double vs = varsigma(params, eps);
    return weight_vs(vs) / (params.beta * params.beta * vs);
  };
  data.continuum_integral = [weight_vs, beta, D, varsigma_max](
                                const std::function<cplx(double)>& f,
                                const QuadratureSpec& qspec) {
    return integrate_interval(
        [&](double vs) {
          const double eps = 0.5 * beta * beta * (vs * vs + D * D);
          return weight_vs(vs) * f(eps);
        },
        0.0, varsigma_max, qspec);
  };
  return data;
}

std::vector<LimitPoint> harmonic_limit_study(cplx z, double omega, int m,
                                             const std::vector<double>& betas) {
  if (!(omega > 0.0))
    throw std::invalid_argument("harmonic_limit_study: omega must be positive");
  QuadratureSpec qspec;
  qspec.abs_tol = 1e-10;
  qspec.rel_tol = 1e-10;
  const GCSLabel target{-std::conj(z), m, HarmonicParams{omega}};
  const double t_center = kSqrt2 * target.z.real() / omega;
  const double t_half =
      (8.0 + std::sqrt(2.0 * m + 1.0)) / std::sqrt(omega);
  std::vector<LimitPoint> out;
  for (double beta : betas) {
    const MorseParams params =
        make_params(omega * omega / (2.0 * beta * beta), beta);
    const MorseGCSLabel label = make_label(z, params);
    const auto [mlo, mhi] =
        morse_window(params, label.xi_z.real() + 0.5, m);
    const double lo = std::min(mlo, t_center - t_half);
    const double hi = std::max(mhi, t_center + t_half);
    const cplx ov = integrate_interval(
        [&](double x) {
          return std::conj(gcs_phi_morse(label, m, x)) *
                 gcs_phi(target, x);
        },
        lo, hi, qspec);
    LimitPoint pt;
    pt.beta = beta;
    pt.distance = std::sqrt(std::max(0.0, 2.0 * (1.0 - std::abs(ov))));
    pt.angle = std::arg(ov);
    out.push_back(pt);
  }
  return out;
}

}  // namespace gcs
