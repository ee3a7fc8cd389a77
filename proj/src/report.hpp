#pragma once

#include <complex>
#include <string>
#include <vector>

namespace gcs {

// One verification check: a named identity, the value it should take, the
// value the library computed, and the pass verdict at the given tolerance.
struct CheckEntry {
  std::string check_id;
  std::string statement;  // plain-language description of the identity
  std::complex<double> target;
  std::complex<double> computed;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Report {
  std::vector<CheckEntry> entries;
  double wall_seconds = 0.0;

  int total() const { return static_cast<int>(entries.size()); }
  int passed_count() const {
    int n = 0;
    for (const auto& e : entries)
      if (e.passed) ++n;
    return n;
  }
  bool all_passed() const { return passed_count() == total(); }

  // Appends an entry, deriving abs_error and the verdict from the values.
  void add(std::string check_id, std::string statement,
           std::complex<double> target, std::complex<double> computed,
           double tolerance) {
    CheckEntry e;
    e.check_id = std::move(check_id);
    e.statement = std::move(statement);
    e.target = target;
    e.computed = computed;
    e.abs_error = std::abs(computed - target);
    e.tolerance = tolerance;
    e.passed = e.abs_error <= tolerance;
    entries.push_back(std::move(e));
  }
};

}  // namespace gcs
