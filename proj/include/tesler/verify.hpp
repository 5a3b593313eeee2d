#pragma once

// Self-checks across modules, grouped in suites and bounded by a size cap.

#include <string>
#include <string_view>
#include <vector>

namespace tesler {

enum class Suite { Counts, Volumes, Faces, Harmonics, All };

/// "counts" | "volumes" | "faces" | "harmonics" | "all". Throws
/// std::invalid_argument otherwise.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
  double elapsed_ms;
};

/// Runs every check of the suite whose size parameter is <= nmax (each
/// check also has its own ceiling). Exceptions inside a check are caught
/// and reported as failures.
std::vector<CheckResult> run_suite(Suite suite, int nmax, unsigned threads = 1);

}  // namespace tesler
