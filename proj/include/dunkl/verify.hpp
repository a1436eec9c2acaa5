#pragma once

#include <string>
#include <vector>

namespace dunklcore {

// One verification case. Exact checks report tol = 0 and residual 0 or 1;
// numeric checks report the achieved residual against their tolerance.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  long double residual = 0;
  long double tol = 0;
  std::string detail;
};

struct VerifyReport {
  std::string version = "1.0.0";
  std::string level;  // "fast" or "full"
  unsigned long long seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// Ordered list of suite names available at the given level.
std::vector<std::string> verify_suites(bool full);

// Runs every registered check (or only `suite_filter` when nonempty) on a
// small worker pool; results come back in registration order regardless of
// scheduling, so reports are deterministic for a fixed seed. level is "fast"
// (exact arithmetic only) or "full" (adds the seeded numeric suites).
VerifyReport run_verify(const std::string& level, unsigned long long seed,
                        const std::string& suite_filter = "");

// Deterministic serializations: floating values are printed with %.12Le and
// no timestamps or environment data are embedded.
std::string report_json(const VerifyReport& rep);
std::string report_csv(const VerifyReport& rep);

}  // namespace dunklcore
