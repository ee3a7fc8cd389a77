// Command-line harness for the generalized-coherent-state library.
//
// Subcommands: verify, tabulate, kernel, limit-study. All numerical work
// goes through the C interface in gcs/gcs.h. Exit codes: 0 all checks
// passed, 1 at least one check failed, 2 configuration error, 3 numerical
// (quadrature) failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcs/gcs.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

struct Options {
  std::string model = "harmonic";
  double z_re = std::numeric_limits<double>::quiet_NaN();
  double z_im = std::numeric_limits<double>::quiet_NaN();
  double omega = 1.0;
  double v0 = 8.5078125;
  double beta = 0.5;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  int m_max = -1;
  int n_max = -1;
  std::vector<std::string> tol;
  std::string out;
};

// Fills model-dependent defaults for values the user did not set.
void resolve_defaults(const CLI::App& app, Options& opt) {
  const bool morse = (opt.model == "morse");
  if (app.get_option("--z-re")->count() == 0) opt.z_re = morse ? 0.4 : 0.7;
  if (app.get_option("--z-im")->count() == 0) opt.z_im = morse ? 0.2 : 0.3;
  if (opt.m_max < 0) opt.m_max = morse ? 6 : 8;
  if (opt.n_max < 0) opt.n_max = morse ? 6 : 8;
}

void add_common_options(CLI::App& app, Options& opt) {
  app.add_option("--model", opt.model, "Model family: harmonic or morse")
      ->check(CLI::IsMember({"harmonic", "morse"}))
      ->capture_default_str();
  app.add_option("--z-re", opt.z_re,
                 "Re z (default 0.7 harmonic, 0.4 morse)");
  app.add_option("--z-im", opt.z_im,
                 "Im z (default 0.3 harmonic, 0.2 morse)");
  app.add_option("--omega", opt.omega, "Oscillator frequency")
      ->capture_default_str();
  app.add_option("--v0", opt.v0, "Morse well depth")->capture_default_str();
  app.add_option("--beta", opt.beta, "Morse steepness")
      ->capture_default_str();
  app.add_option("--gamma", opt.gamma,
                 "Morse auxiliary-basis parameter (default: derived)");
  app.add_option("--m-max", opt.m_max,
                 "Highest state index (default 8 harmonic, 6 morse)");
  app.add_option("--n-max", opt.n_max,
                 "Highest secondary index (default 8 harmonic, 6 morse)");
  app.add_option("--tol", opt.tol,
                 "Tolerance override name=value (repeatable)");
  app.add_option("--out", opt.out, "Output file (default: stdout)");
}

int status_to_exit(gcs_status status) {
  switch (status) {
    case GCS_OK:
      return kExitPass;
    case GCS_NUMERICAL:
      return kExitNumericalFailure;
    case GCS_INVALID_ARGUMENT:
      return kExitConfigError;
    case GCS_INTERNAL:
      break;
  }
  return kExitNumericalFailure;
}

int report_failure(const char* where, gcs_status status) {
  std::cerr << "error: " << where << ": " << gcs_status_message(status)
            << " (" << gcs_last_error() << ")\n";
  return status_to_exit(status);
}

using ModelPtr = std::unique_ptr<gcs_model, decltype(&gcs_model_destroy)>;

// Creates the configured model, or sets exit_code and returns null.
ModelPtr create_model(const Options& opt, int& exit_code) {
  gcs_model* raw = nullptr;
  gcs_status status;
  if (opt.model == "morse") {
    status = gcs_model_create_morse(opt.z_re, opt.z_im, opt.v0, opt.beta,
                                    opt.gamma, &raw);
  } else {
    status = gcs_model_create_harmonic(opt.z_re, opt.z_im, opt.omega, &raw);
  }
  if (status != GCS_OK) {
    exit_code = report_failure("model creation", status);
    return ModelPtr(nullptr, &gcs_model_destroy);
  }
  exit_code = kExitPass;
  return ModelPtr(raw, &gcs_model_destroy);
}

std::string join_tolerances(const std::vector<std::string>& tol) {
  std::string joined;
  for (const auto& t : tol) {
    if (!joined.empty()) joined += ';';
    joined += t;
  }
  return joined;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json parameters_json(const Options& opt) {
  json p = {{"z_re", opt.z_re}, {"z_im", opt.z_im}};
  if (opt.model == "morse") {
    p["v0"] = opt.v0;
    p["beta"] = opt.beta;
    if (!std::isnan(opt.gamma)) p["gamma"] = opt.gamma;
  } else {
    p["omega"] = opt.omega;
  }
  p["m_max"] = opt.m_max;
  p["n_max"] = opt.n_max;
  return p;
}

json entry_json(const std::string& check_id, const std::string& statement,
                std::complex<double> target, std::complex<double> computed,
                double abs_error, double tolerance, bool passed) {
  return json{{"check_id", check_id},
              {"statement", statement},
              {"target", {{"re", target.real()}, {"im", target.imag()}}},
              {"computed", {{"re", computed.real()}, {"im", computed.imag()}}},
              {"abs_error", abs_error},
              {"tolerance", tolerance},
              {"passed", passed}};
}

// Writes text to opt.out, or stdout when no path is configured.
bool write_output(const Options& opt, const std::string& text,
                  const char* what) {
  if (opt.out.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << opt.out << " for " << what << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

int run_verify(const Options& opt) {
  int exit_code = kExitPass;
  ModelPtr model = create_model(opt, exit_code);
  if (!model) return exit_code;

  const std::string overrides = join_tolerances(opt.tol);
  gcs_report* raw = nullptr;
  const gcs_status status = gcs_run_verification(
      model.get(), opt.m_max, opt.n_max,
      overrides.empty() ? nullptr : overrides.c_str(), &raw);
  if (status != GCS_OK) return report_failure("verification", status);
  std::unique_ptr<gcs_report, decltype(&gcs_report_destroy)> report(
      raw, &gcs_report_destroy);

  json doc = {{"model", opt.model},
              {"parameters", parameters_json(opt)},
              {"entries", json::array()}};
  std::printf("%-22s %-6s %-13s %-13s\n", "check", "status", "abs_error",
              "tolerance");
  const size_t n = gcs_report_entry_count(report.get());
  for (size_t i = 0; i < n; ++i) {
    double tr, ti, cr, ci, abs_error, tolerance;
    int passed;
    if (gcs_report_entry_values(report.get(), i, &tr, &ti, &cr, &ci,
                                &abs_error, &tolerance, &passed) != GCS_OK)
      return report_failure("report access", GCS_INTERNAL);
    const char* id = gcs_report_check_id(report.get(), i);
    const char* statement = gcs_report_statement(report.get(), i);
    std::printf("%-22s %-6s %-13.3e %-13.3e\n", id,
                passed ? "PASS" : "FAIL", abs_error, tolerance);
    doc["entries"].push_back(entry_json(id, statement, {tr, ti}, {cr, ci},
                                        abs_error, tolerance, passed != 0));
  }
  const size_t total = gcs_report_total(report.get());
  const size_t passed = gcs_report_passed(report.get());
  const double wall = gcs_report_wall_seconds(report.get());
  std::printf("%zu/%zu checks passed in %.2f s\n", passed, total, wall);
  doc["summary"] = {{"total", total},
                    {"passed", passed},
                    {"wall_time_seconds", wall}};

  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << opt.out << " for report\n";
      return kExitConfigError;
    }
    f << doc.dump(2) << "\n";
  }
  return passed == total ? kExitPass : kExitCheckFailure;
}

struct TabulateOptions {
  std::string what;
  double grid_min = -6.0;
  double grid_max = 6.0;
  double grid_step = 0.05;
  int m = 0;
};

int run_tabulate(const Options& opt, const TabulateOptions& tab) {
  if (tab.what != "coefficients" &&
      !(tab.grid_step > 0.0 && tab.grid_max >= tab.grid_min)) {
    std::cerr << "error: invalid grid\n";
    return kExitConfigError;
  }
  int exit_code = kExitPass;
  ModelPtr model = create_model(opt, exit_code);
  if (!model) return exit_code;

  std::ostringstream body;
  body << "# tabulated values, model=" << opt.model << " what=" << tab.what
       << " m=" << tab.m << " z=(" << fmt17(opt.z_re) << ","
       << fmt17(opt.z_im) << ")";
  if (opt.model == "morse")
    body << " v0=" << fmt17(opt.v0) << " beta=" << fmt17(opt.beta);
  else
    body << " omega=" << fmt17(opt.omega);
  body << "\n# columns: coordinate,re,im,modulus\n";

  const auto emit = [&](double coord, double re, double im) {
    body << fmt17(coord) << ',' << fmt17(re) << ',' << fmt17(im) << ','
         << fmt17(std::hypot(re, im)) << '\n';
  };

  gcs_status status = GCS_OK;
  if (tab.what == "coefficients") {
    for (int s = 0; s <= opt.n_max && status == GCS_OK; ++s) {
      double re = 0.0, im = 0.0;
      status = gcs_eval_coefficient(model.get(), tab.m, s, &re, &im);
      if (status == GCS_OK) emit(s, re, im);
    }
  } else {
    const long steps =
        std::lround((tab.grid_max - tab.grid_min) / tab.grid_step);
    for (long k = 0; k <= steps && status == GCS_OK; ++k) {
      const double x = tab.grid_min + static_cast<double>(k) * tab.grid_step;
      double re = 0.0, im = 0.0;
      if (tab.what == "phi") {
        status = gcs_eval_state(model.get(), tab.m, x, &re, &im);
      } else if (tab.what == "psi") {
        status = gcs_eval_eigenfunction(model.get(), tab.m, x, &re);
      } else {  // glauber
        status = gcs_eval_glauber(model.get(), x, &re, &im);
      }
      if (status == GCS_OK) emit(x, re, im);
    }
  }
  if (status != GCS_OK) return report_failure("tabulation", status);
  if (!write_output(opt, body.str(), "tabulation")) return kExitConfigError;
  return kExitPass;
}

struct KernelOptions {
  double w_re = 0.0;
  double w_im = 0.0;
  int m = 0;
  int n_trunc = 300;
};

int run_kernel(const Options& opt, const KernelOptions& ker) {
  double rel_tol = 1e-8;
  for (const auto& t : opt.tol) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || t.substr(0, eq) != "landau-kernel") {
      std::cerr << "error: unknown tolerance name for kernel: " << t << "\n";
      return kExitConfigError;
    }
    try {
      rel_tol = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "error: bad tolerance value: " << t << "\n";
      return kExitConfigError;
    }
  }

  double out4[4] = {0, 0, 0, 0};
  const gcs_status status =
      gcs_kernel_landau(opt.z_re, opt.z_im, ker.w_re, ker.w_im, ker.m,
                        ker.n_trunc, out4);
  if (status != GCS_OK) return report_failure("kernel evaluation", status);

  const std::complex<double> series(out4[0], out4[1]);
  const std::complex<double> closed(out4[2], out4[3]);
  const double abs_error = std::abs(series - closed);
  const double scale = std::abs(closed);
  const double relative_gap =
      scale > 0.0 ? abs_error / scale : abs_error;
  const double tolerance = rel_tol * (scale > 0.0 ? scale : 1.0);
  const bool passed = abs_error <= tolerance;

  json doc = entry_json(
      "landau-kernel",
      "truncated level-m kernel series matches the closed form "
      "(tolerance is relative, scaled by the closed-form modulus)",
      closed, series, abs_error, tolerance, passed);
  doc["relative_gap"] = relative_gap;
  doc["n_trunc"] = ker.n_trunc;
  if (!write_output(opt, doc.dump(2) + "\n", "kernel report"))
    return kExitConfigError;
  return passed ? kExitPass : kExitCheckFailure;
}

struct LimitOptions {
  std::string beta_path = "0.5,0.25,0.125,0.0625";
  int m = 0;
};

int run_limit_study(const Options& opt, const LimitOptions& lim) {
  std::vector<double> betas;
  std::stringstream ss(lim.beta_path);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      betas.push_back(std::stod(item));
    } catch (const std::exception&) {
      std::cerr << "error: bad beta value: " << item << "\n";
      return kExitConfigError;
    }
  }
  if (betas.empty()) {
    std::cerr << "error: empty beta path\n";
    return kExitConfigError;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << opt.out << "\n";
      return kExitConfigError;
    }
    os = &file;
  }
  *os << "# harmonic-limit study, m=" << lim.m << " z=(" << fmt17(opt.z_re)
      << "," << fmt17(opt.z_im) << ") omega=" << fmt17(opt.omega) << "\n"
      << "# columns: beta,distance,phase\n"
      << std::flush;

  // One library call per beta so earlier rows are already flushed if a
  // later point fails.
  std::vector<double> distances(betas.size()), angles(betas.size());
  for (size_t k = 0; k < betas.size(); ++k) {
    const gcs_status status =
        gcs_limit_study(opt.z_re, opt.z_im, opt.omega, lim.m, &betas[k], 1,
                        &distances[k], &angles[k]);
    if (status != GCS_OK) return report_failure("limit study", status);
    *os << fmt17(betas[k]) << ',' << fmt17(distances[k]) << ','
        << fmt17(angles[k]) << '\n'
        << std::flush;
  }

  const double threshold = 0.05;
  double worst = 0.0;
  std::string statement;
  if (betas.size() < 2) {
    statement = "single-point path: monotonicity not assessed";
  } else {
    for (size_t k = 1; k < betas.size(); ++k)
      worst = std::max(worst, distances[k] - distances[k - 1]);
    worst = std::max(worst, distances.back() - threshold);
    worst = std::max(0.0, worst);
    statement =
        "limit distances decrease along the path and the final distance "
        "is below 0.05";
  }
  const double tolerance = 1e-12;
  const bool passed = worst <= tolerance;
  json doc = entry_json("limit-monotonicity", statement, 0.0, worst, worst,
                        tolerance, passed);
  doc["final_distance"] = distances.back();
  std::cout << doc.dump(2) << "\n";
  return passed ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized coherent states of the oscillator and Morse families: "
      "verification suites, tabulation, kernels, and the harmonic-limit "
      "study"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key=value configuration file");

  Options opt;
  add_common_options(app, opt);

  CLI::App* verify = app.add_subcommand("verify", "Run the check suite");
  CLI::App* tabulate =
      app.add_subcommand("tabulate", "Write sampled values as CSV");
  TabulateOptions tab;
  tabulate
      ->add_option("--what", tab.what,
                   "One of: phi, psi, glauber, coefficients")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "glauber", "coefficients"}));
  tabulate->add_option("--grid-min", tab.grid_min, "Grid start")
      ->capture_default_str();
  tabulate->add_option("--grid-max", tab.grid_max, "Grid end")
      ->capture_default_str();
  tabulate->add_option("--grid-step", tab.grid_step, "Grid step")
      ->capture_default_str();
  tabulate->add_option("--m", tab.m, "State index")->capture_default_str();

  CLI::App* kernel =
      app.add_subcommand("kernel", "Reproducing-kernel series vs closed form");
  KernelOptions ker;
  kernel->add_option("--w-re", ker.w_re, "Re w")->capture_default_str();
  kernel->add_option("--w-im", ker.w_im, "Im w")->capture_default_str();
  kernel->add_option("--m", ker.m, "Kernel level")->capture_default_str();
  kernel->add_option("--n-trunc", ker.n_trunc, "Series truncation")
      ->capture_default_str();

  CLI::App* limit =
      app.add_subcommand("limit-study", "Morse-to-oscillator limit distances");
  LimitOptions lim;
  limit->add_option("--beta-path", lim.beta_path,
                    "Comma-separated decreasing steepness values")
      ->capture_default_str();
  limit->add_option("--m", lim.m, "State index")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  resolve_defaults(app, opt);
  if (verify->parsed()) return run_verify(opt);
  if (tabulate->parsed()) return run_tabulate(opt, tab);
  if (kernel->parsed()) return run_kernel(opt, ker);
  return run_limit_study(opt, lim);
}
