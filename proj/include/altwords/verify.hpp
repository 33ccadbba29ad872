#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace altwords {

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Regenerates the reference 132 and 312 consecutive-pattern tables (k <= 5, n <= 9).
SuiteReport verify_tables();
/// Empirical Wilf classes of all 24 patterns (k <= 5, even n <= 8, odd n <= 9)
/// against the class letters of wilf_catalog().
SuiteReport verify_wilf();
/// Dyck bijection round trips and class census (k <= 8); class partition and
/// member generation against enumeration (k <= 5, i <= 4).
SuiteReport verify_bijection();
/// Every closed form and recurrence against enumeration (k <= 5, n <= 9), plus the
/// algebraic cross-checks between formulas.
SuiteReport verify_formulas();

/// "tables", "wilf", "bijection", "formulas" or "all". Throws std::invalid_argument
/// for other names.
std::vector<SuiteReport> run_suites(std::string_view which);

}  // namespace altwords
