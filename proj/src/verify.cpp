#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "harmonic.hpp"
#include "jmatrix.hpp"
#include "morse.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace gcs {

namespace {

double pick(const ToleranceMap& overrides, const std::string& id,
            double fallback) {
  const auto it = overrides.find(id);
  return (it == overrides.end()) ? fallback : it->second;
}

void validate_overrides(const ToleranceMap& overrides,
                        const std::set<std::string>& known) {
  for (const auto& [k, v] : overrides) {
    if (known.find(k) == known.end())
      throw std::invalid_argument("unknown tolerance name: " + k);
    if (!(v > 0.0))
      throw std::invalid_argument("tolerance must be positive: " + k);
  }
}

// Runs one check body; numerical failures become failed entries instead of
// escaping.
void guarded(Report& report, const std::string& id,
             const std::string& statement, double tolerance,
             const std::function<double()>& body) {
  try {
    const double dev = body();
    report.add(id, statement, 0.0, dev, tolerance);
  } catch (const QuadratureError& err) {
    CheckEntry e;
    e.check_id = id;
    e.statement = statement + " (numerical failure: " + err.what() + ")";
    e.target = 0.0;
    e.computed = std::numeric_limits<double>::quiet_NaN();
    e.abs_error = std::numeric_limits<double>::infinity();
    e.tolerance = tolerance;
    e.passed = false;
    report.entries.push_back(std::move(e));
  }
}

cplx window_overlap(const std::function<cplx(double)>& f,
                    const std::function<cplx(double)>& g, double lo, double hi,
                    const QuadratureSpec& qspec) {
  return integrate_interval(
      [&](double x) { return std::conj(f(x)) * g(x); }, lo, hi, qspec);
}

double factorial_d(int n) { return std::tgamma(n + 1.0); }

}  // namespace

Report run_harmonic_verification(std::complex<double> z, double omega,
                                 int m_max, int n_max,
                                 const ToleranceMap& overrides) {
  const std::set<std::string> known = {
      "orthonormality",      "tridiagonal-band", "unitarity-rows",
      "unitarity-columns",   "derivative-identity",
      "recursion-polynomials"};
  validate_overrides(overrides, known);
  if (m_max < 0 || n_max < 0)
    throw std::invalid_argument("verification: negative index bound");
  const HarmonicParams params{omega};
  if (!(omega > 0.0))
    throw std::invalid_argument("verification: omega must be positive");
  QuadratureSpec q;
  q.abs_tol = 1e-11;
  q.rel_tol = 1e-11;
  const auto t0 = std::chrono::steady_clock::now();
  Report report;

  const double half =
      (8.0 + std::sqrt(2.0 * (m_max + n_max) + 1.0)) / std::sqrt(omega);
  const double ctr = std::sqrt(2.0) * z.real() / omega;

  guarded(report, "orthonormality",
          "states of distinct index at one label are orthonormal",
          pick(overrides, "orthonormality", 1e-9), [&] {
            double worst = 0.0;
            for (int n = 0; n <= m_max; ++n) {
              for (int m = n; m <= m_max; ++m) {
                const cplx ov = window_overlap(
                    [&](double xi) { return gcs_phi({z, n, params}, xi); },
                    [&](double xi) { return gcs_phi({z, m, params}, xi); },
                    ctr - half, ctr + half, q);
                const double expect = (n == m) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(ov - cplx(expect)));
              }
            }
            return worst;
          });

  guarded(report, "tridiagonal-band",
          "the Hamiltonian matrix in the state family is tridiagonal with "
          "the closed-form bands",
          pick(overrides, "tridiagonal-band", 1e-8), [&] {
            const TridiagonalRep rep = harmonic_rep(z, omega, n_max + 2);
            double worst = 0.0;
            for (int n = 0; n <= n_max; ++n) {
              for (int m = 0; m <= n_max; ++m) {
                cplx band(0.0, 0.0);
                if (n == m) band = rep.a[n];
                if (n == m + 1) band = rep.b[m];
                if (m == n + 1) band = std::conj(rep.b[n]);
                const cplx el =
                    matrix_element_quadrature(n, m, z, params, q);
                worst = std::max(worst, std::abs(el - band));
              }
            }
            return worst;
          });

  guarded(report, "unitarity-rows",
          "damped coefficient matrix (40x200) has orthonormal rows",
          pick(overrides, "unitarity-rows", 1e-8), [&] {
            const double damp = std::exp(-std::norm(z) / (2.0 * omega));
            std::vector<std::vector<cplx>> U(40, std::vector<cplx>(200));
            for (int m = 0; m < 40; ++m)
              for (int s = 0; s < 200; ++s)
                U[m][s] =
                    damp * expansion_coefficient({z, m, params}, s);
            double worst = 0.0;
            for (int m = 0; m < 40; ++m) {
              for (int n = m; n < 40; ++n) {
                cplx acc(0.0, 0.0);
                for (int s = 0; s < 200; ++s)
                  acc += U[m][s] * std::conj(U[n][s]);
                const double expect = (m == n) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(acc - cplx(expect)));
              }
            }
            return worst;
          });

  guarded(report, "unitarity-columns",
          "damped coefficient matrix has orthonormal moderate-index columns",
          pick(overrides, "unitarity-columns", 1e-6), [&] {
            const double damp = std::exp(-std::norm(z) / (2.0 * omega));
            std::vector<std::vector<cplx>> U(40, std::vector<cplx>(26));
            for (int m = 0; m < 40; ++m)
              for (int s = 0; s <= 25; ++s)
                U[m][s] =
                    damp * expansion_coefficient({z, m, params}, s);
            double worst = 0.0;
            for (int s = 0; s <= 25; ++s) {
              for (int sp = s; sp <= 25; ++sp) {
                cplx acc(0.0, 0.0);
                for (int m = 0; m < 40; ++m)
                  acc += std::conj(U[m][s]) * U[m][sp];
                const double expect = (s == sp) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(acc - cplx(expect)));
              }
            }
            return worst;
          });

  guarded(report, "derivative-identity",
          "analytic derivative equals the first-order ladder combination "
          "pointwise (relative)",
          pick(overrides, "derivative-identity", 1e-9), [&] {
            double worst = 0.0;
            for (int m = 0; m <= std::min(5, m_max); ++m) {
              for (double xi = -4.0; xi <= 4.0; xi += 0.5) {
                const GCSLabel label{z, m, params};
                const cplx lhs = gcs_phi_derivative(label, xi);
                cplx rhs = (std::sqrt(2.0) * std::conj(z) - omega * xi) *
                           gcs_phi(label, xi);
                if (m >= 1)
                  rhs -= std::sqrt(2.0 * m * omega) *
                         gcs_phi({z, m - 1, params}, xi);
                worst = std::max(worst,
                                 std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
              }
            }
            return worst;
          });

  guarded(report, "recursion-polynomials",
          "three-term recursion values factor through the discrete-weight "
          "closed form (relative)",
          pick(overrides, "recursion-polynomials", 1e-9), [&] {
            if (z == cplx(0.0, 0.0)) return 0.0;
            const TridiagonalRep rep = harmonic_rep(z, omega, 8);
            const double t = std::norm(z) / omega;
            double worst = 0.0;
            for (int s = 0; s <= 10; ++s) {
              const auto p = recursion_polynomials(rep, s * omega, 7);
              for (int n = 0; n <= 6; ++n) {
                const cplx expect =
                    std::pow(std::conj(z) / std::sqrt(omega), n) *
                    charlier(n, static_cast<double>(s), t) /
                    std::sqrt(factorial_d(n));
                worst = std::max(worst, std::abs(p[n] - expect) /
                                            (1.0 + std::abs(expect)));
              }
            }
            return worst;
          });

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

Report run_morse_verification(std::complex<double> z, double V0, double beta,
                              double gamma, int m_max, int n_max,
                              const ToleranceMap& overrides) {
  const std::set<std::string> known = {
      "orthonormality", "tridiagonal-band",   "hermitian-symmetry",
      "spectral-closure", "eigenrelation",    "positivity",
      "limit-monotonicity"};
  validate_overrides(overrides, known);
  if (m_max < 0 || n_max < 0)
    throw std::invalid_argument("verification: negative index bound");
  const MorseParams params = make_params(V0, beta);
  const MorseGCSLabel label = make_label(z, params);
  const double gam = std::isnan(gamma) ? label.xi_z.real() : gamma;
  QuadratureSpec q;
  q.abs_tol = 1e-11;
  q.rel_tol = 1e-11;
  const auto t0 = std::chrono::steady_clock::now();
  Report report;

  const int band_max = std::min(n_max, 6);
  const auto state_window = [&](int m) {
    return morse_window(params, label.xi_z.real() + 0.5, m + 1);
  };

  guarded(report, "orthonormality",
          "states of distinct index at one label are orthonormal",
          pick(overrides, "orthonormality", 1e-8), [&] {
            double worst = 0.0;
            for (int n = 0; n <= m_max; ++n) {
              for (int m = n; m <= m_max; ++m) {
                const auto [lo, hi] = state_window(m);
                const cplx ov = window_overlap(
                    [&](double x) { return gcs_phi_morse(label, n, x); },
                    [&](double x) { return gcs_phi_morse(label, m, x); }, lo,
                    hi, q);
                const double expect = (n == m) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(ov - cplx(expect)));
              }
            }
            return worst;
          });

  // The quadrature matrix is shared by the band and symmetry checks.
  std::vector<std::vector<cplx>> E(band_max + 1,
                                   std::vector<cplx>(band_max + 1));
  bool matrix_ok = true;
  try {
    for (int n = 0; n <= band_max; ++n)
      for (int m = 0; m <= band_max; ++m)
        E[n][m] = morse_matrix_element_quadrature(label, n, m, q);
  } catch (const QuadratureError&) {
    matrix_ok = false;
  }

  guarded(report, "tridiagonal-band",
          "the Hamiltonian matrix in the state family is tridiagonal with "
          "the closed-form bands",
          pick(overrides, "tridiagonal-band", 1e-6), [&]() -> double {
            if (!matrix_ok) throw QuadratureError("matrix quadrature failed");
            double worst = 0.0;
            for (int n = 0; n <= band_max; ++n) {
              for (int m = 0; m <= band_max; ++m) {
                cplx band(0.0, 0.0);
                if (n == m) band = morse_tridiag(label, n).a;
                if (n == m + 1) band = morse_tridiag(label, m).b;
                if (m == n + 1) band = std::conj(morse_tridiag(label, n).b);
                worst = std::max(worst, std::abs(E[n][m] - band));
              }
            }
            return worst;
          });

  guarded(report, "hermitian-symmetry",
          "quadrature matrix elements form conjugate pairs across the "
          "diagonal",
          pick(overrides, "hermitian-symmetry", 1e-6), [&]() -> double {
            if (!matrix_ok) throw QuadratureError("matrix quadrature failed");
            double worst = 0.0;
            for (int n = 0; n <= band_max; ++n)
              for (int m = 0; m <= band_max; ++m)
                worst = std::max(worst,
                                 std::abs(E[n][m] - std::conj(E[m][n])));
            return worst;
          });

  guarded(report, "spectral-closure",
          "discrete weights plus continuum density close the recursion "
          "polynomial family",
          pick(overrides, "spectral-closure", 1e-6), [&] {
            const SpectralData data = morse_spectral_data(label);
            const int cmax = std::min(4, n_max);
            const TridiagonalRep rep = morse_rep(label, cmax + 2);
            const auto polys = [&](int n, double E_) {
              return recursion_polynomials(rep, E_, cmax + 1)[n];
            };
            double worst = 0.0;
            for (int n = 0; n <= cmax; ++n) {
              for (int m = n; m <= cmax; ++m) {
                const cplx val = closure_check(data, polys, n, m, q);
                const double expect = (n == m) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(val - cplx(expect)));
              }
            }
            return worst;
          });

  guarded(report, "eigenrelation",
          "the closed-form state is an eigenvector of the lowering "
          "factor with eigenvalue z",
          pick(overrides, "eigenrelation", 1e-7), [&] {
            const auto [lo, hi] = state_window(1);
            const auto resid = [&](double x) {
              const cplx a =
                  -glauber_cs_derivative(label, gam, x) / std::sqrt(2.0) +
                  factorization_w(params, x) * glauber_cs(label, gam, x);
              return cplx(std::norm(a - z * glauber_cs(label, gam, x)), 0.0);
            };
            return std::sqrt(
                std::abs(integrate_interval(resid, lo, hi, q)));
          });

  guarded(report, "positivity",
          "diagonal entries |c_n|^2 + d_n^2 of the factorized Hamiltonian "
          "are nonnegative",
          pick(overrides, "positivity", 1e-12), [&] {
            double min_a = 0.0;
            for (int n = 0; n <= 10; ++n)
              min_a = std::min(min_a, morse_tridiag(label, n).a);
            return std::max(0.0, -min_a);
          });

  guarded(report, "limit-monotonicity",
          "harmonic-limit distances decrease along the halving steepness "
          "path",
          pick(overrides, "limit-monotonicity", 1e-12), [&] {
            const std::vector<double> path = {0.5, 0.25, 0.125, 0.0625};
            double worst = 0.0;
            for (int m = 0; m <= std::min(3, m_max); ++m) {
              const auto pts = harmonic_limit_study(z, 1.0, m, path);
              for (size_t k = 1; k < pts.size(); ++k)
                worst = std::max(worst,
                                 pts[k].distance - pts[k - 1].distance);
            }
            return std::max(0.0, worst);
          });

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace gcs
