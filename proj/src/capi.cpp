#include "gcs/gcs.h"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "harmonic.hpp"
#include "morse.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

struct HarmonicModel {
  gcs::cplx z;
  gcs::HarmonicParams params;
};

struct MorseModel {
  gcs::MorseGCSLabel label;
  double gamma;  // resolved (never NaN)
};

}  // namespace

struct gcs_model {
  std::variant<HarmonicModel, MorseModel> impl;
};

struct gcs_report {
  gcs::Report report;
};

namespace {

gcs_status fail(gcs_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

// Translates C++ exceptions from `fn` into status codes at the boundary.
template <typename Fn>
gcs_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GCS_OK;
  } catch (const gcs::QuadratureError& e) {
    return fail(GCS_NUMERICAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GCS_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(GCS_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GCS_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GCS_INTERNAL, e.what());
  } catch (...) {
    return fail(GCS_INTERNAL, "unknown failure");
  }
}

gcs::ToleranceMap parse_overrides(const char* overrides) {
  gcs::ToleranceMap map;
  if (overrides == nullptr) return map;
  std::stringstream ss(overrides);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("tolerance override missing '=': " + item);
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    size_t used = 0;
    double tol = 0.0;
    try {
      tol = std::stod(value, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tolerance value: " + item);
    }
    if (used != value.size())
      throw std::invalid_argument("bad tolerance value: " + item);
    map[name] = tol;
  }
  return map;
}

const gcs::CheckEntry& entry_at(const gcs_report* report, size_t i) {
  if (report == nullptr) throw std::invalid_argument("null report");
  if (i >= report->report.entries.size())
    throw std::out_of_range("report entry index out of range");
  return report->report.entries[i];
}

}  // namespace

extern "C" {

const char* gcs_status_message(gcs_status status) {
  switch (status) {
    case GCS_OK:
      return "ok";
    case GCS_INVALID_ARGUMENT:
      return "invalid argument";
    case GCS_NUMERICAL:
      return "numerical failure";
    case GCS_INTERNAL:
      return "internal error";
  }
  return "unrecognized status";
}

const char* gcs_last_error(void) { return g_last_error.c_str(); }

gcs_status gcs_model_create_harmonic(double z_re, double z_im, double omega,
                                     gcs_model** out) {
  return guard([&] {
    if (out == nullptr) throw std::invalid_argument("null output handle");
    if (!(omega > 0.0))
      throw std::invalid_argument("omega must be positive");
    auto model = std::make_unique<gcs_model>();
    model->impl = HarmonicModel{{z_re, z_im}, gcs::HarmonicParams{omega}};
    *out = model.release();
  });
}

gcs_status gcs_model_create_morse(double z_re, double z_im, double v0,
                                  double beta, double gamma, gcs_model** out) {
  return guard([&] {
    if (out == nullptr) throw std::invalid_argument("null output handle");
    const gcs::MorseParams params = gcs::make_params(v0, beta);
    const gcs::MorseGCSLabel label =
        gcs::make_label(gcs::cplx(z_re, z_im), params);
    const double g = std::isnan(gamma) ? label.xi_z.real() : gamma;
    if (!(2.0 * g + 1.0 > 0.0))
      throw std::invalid_argument("gamma must satisfy 2 gamma + 1 > 0");
    auto model = std::make_unique<gcs_model>();
    model->impl = MorseModel{label, g};
    *out = model.release();
  });
}

void gcs_model_destroy(gcs_model* model) { delete model; }

gcs_status gcs_eval_state(const gcs_model* model, int m, double x,
                          double* out_re, double* out_im) {
  return guard([&] {
    if (model == nullptr) throw std::invalid_argument("null model");
    if (out_re == nullptr || out_im == nullptr)
      throw std::invalid_argument("null output");
    if (m < 0) throw std::invalid_argument("negative state index");
    gcs::cplx v;
    if (const auto* h = std::get_if<HarmonicModel>(&model->impl)) {
      v = gcs::gcs_phi({h->z, m, h->params}, x);
    } else {
      const auto& mo = std::get<MorseModel>(model->impl);
      v = gcs::gcs_phi_morse(mo.label, m, x);
    }
    *out_re = v.real();
    *out_im = v.imag();
  });
}

gcs_status gcs_eval_eigenfunction(const gcs_model* model, int n, double x,
                                  double* out) {
  return guard([&] {
    if (model == nullptr) throw std::invalid_argument("null model");
    if (out == nullptr) throw std::invalid_argument("null output");
    if (n < 0) throw std::invalid_argument("negative eigenfunction index");
    if (const auto* h = std::get_if<HarmonicModel>(&model->impl)) {
      *out = gcs::eigenfunction_psi(n, h->params, x);
    } else {
      const auto& mo = std::get<MorseModel>(model->impl);
      *out = gcs::bound_state(mo.label.params, n, x);
    }
  });
}

gcs_status gcs_eval_glauber(const gcs_model* model, double x, double* out_re,
                            double* out_im) {
  return guard([&] {
    if (model == nullptr) throw std::invalid_argument("null model");
    if (out_re == nullptr || out_im == nullptr)
      throw std::invalid_argument("null output");
    const auto* mo = std::get_if<MorseModel>(&model->impl);
    if (mo == nullptr)
      throw std::invalid_argument(
          "annihilation-operator eigenvector requires a Morse model");
    const gcs::cplx v = gcs::glauber_cs(mo->label, mo->gamma, x);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

gcs_status gcs_eval_coefficient(const gcs_model* model, int m, int s,
                                double* out_re, double* out_im) {
  return guard([&] {
    if (model == nullptr) throw std::invalid_argument("null model");
    if (out_re == nullptr || out_im == nullptr)
      throw std::invalid_argument("null output");
    if (m < 0 || s < 0) throw std::invalid_argument("negative index");
    gcs::cplx v;
    if (const auto* h = std::get_if<HarmonicModel>(&model->impl)) {
      v = gcs::expansion_coefficient({h->z, m, h->params}, s);
    } else {
      const auto& mo = std::get<MorseModel>(model->impl);
      v = gcs::glauber_coefficient(mo.label, mo.gamma, s);
    }
    *out_re = v.real();
    *out_im = v.imag();
  });
}

gcs_status gcs_tridiagonal(const gcs_model* model, size_t len, double* a,
                           double* b_re, double* b_im) {
  return guard([&] {
    if (model == nullptr) throw std::invalid_argument("null model");
    if (len == 0) return;
    if (a == nullptr || b_re == nullptr || b_im == nullptr)
      throw std::invalid_argument("null output array");
    gcs::TridiagonalRep rep;
    if (const auto* h = std::get_if<HarmonicModel>(&model->impl)) {
      rep = gcs::harmonic_rep(h->z, h->params.omega, static_cast<int>(len));
    } else {
      const auto& mo = std::get<MorseModel>(model->impl);
      rep = gcs::morse_rep(mo.label, static_cast<int>(len));
    }
    for (size_t n = 0; n < len; ++n) {
      a[n] = rep.a[n];
      b_re[n] = rep.b[n].real();
      b_im[n] = rep.b[n].imag();
    }
  });
}

gcs_status gcs_kernel_landau(double z_re, double z_im, double w_re,
                             double w_im, int m, int n_trunc, double out4[4]) {
  return guard([&] {
    if (out4 == nullptr) throw std::invalid_argument("null output array");
    const auto [ser, cls] = gcs::landau_kernel(
        gcs::cplx(z_re, z_im), gcs::cplx(w_re, w_im), m, n_trunc);
    out4[0] = ser.real();
    out4[1] = ser.imag();
    out4[2] = cls.real();
    out4[3] = cls.imag();
  });
}

gcs_status gcs_limit_study(double z_re, double z_im, double omega, int m,
                           const double* betas, size_t n, double* distances,
                           double* angles) {
  return guard([&] {
    if (n == 0) return;
    if (betas == nullptr || distances == nullptr || angles == nullptr)
      throw std::invalid_argument("null array");
    const std::vector<double> path(betas, betas + n);
    const auto pts =
        gcs::harmonic_limit_study(gcs::cplx(z_re, z_im), omega, m, path);
    for (size_t k = 0; k < n; ++k) {
      distances[k] = pts[k].distance;
      angles[k] = pts[k].angle;
    }
  });
}

gcs_status gcs_run_verification(const gcs_model* model, int m_max, int n_max,
                                const char* overrides, gcs_report** out) {
  return guard([&] {
    if (model == nullptr) throw std::invalid_argument("null model");
    if (out == nullptr) throw std::invalid_argument("null output handle");
    const gcs::ToleranceMap map = parse_overrides(overrides);
    auto report = std::make_unique<gcs_report>();
    if (const auto* h = std::get_if<HarmonicModel>(&model->impl)) {
      report->report = gcs::run_harmonic_verification(h->z, h->params.omega,
                                                      m_max, n_max, map);
    } else {
      const auto& mo = std::get<MorseModel>(model->impl);
      report->report = gcs::run_morse_verification(
          mo.label.z, mo.label.params.V0, mo.label.params.beta, mo.gamma,
          m_max, n_max, map);
    }
    *out = report.release();
  });
}

size_t gcs_report_entry_count(const gcs_report* report) {
  return report == nullptr ? 0 : report->report.entries.size();
}

const char* gcs_report_check_id(const gcs_report* report, size_t i) {
  try {
    return entry_at(report, i).check_id.c_str();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

const char* gcs_report_statement(const gcs_report* report, size_t i) {
  try {
    return entry_at(report, i).statement.c_str();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

gcs_status gcs_report_entry_values(const gcs_report* report, size_t i,
                                   double* target_re, double* target_im,
                                   double* computed_re, double* computed_im,
                                   double* abs_error, double* tolerance,
                                   int* passed) {
  return guard([&] {
    const gcs::CheckEntry& e = entry_at(report, i);
    if (target_re) *target_re = e.target.real();
    if (target_im) *target_im = e.target.imag();
    if (computed_re) *computed_re = e.computed.real();
    if (computed_im) *computed_im = e.computed.imag();
    if (abs_error) *abs_error = e.abs_error;
    if (tolerance) *tolerance = e.tolerance;
    if (passed) *passed = e.passed ? 1 : 0;
  });
}

size_t gcs_report_total(const gcs_report* report) {
  return report == nullptr ? 0 : report->report.total();
}

size_t gcs_report_passed(const gcs_report* report) {
  return report == nullptr ? 0 : report->report.passed_count();
}

double gcs_report_wall_seconds(const gcs_report* report) {
  return report == nullptr ? 0.0 : report->report.wall_seconds;
}

void gcs_report_destroy(gcs_report* report) { delete report; }

}  // extern "C"
