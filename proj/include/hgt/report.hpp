#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hgt/rational.hpp"

namespace hgt {

/// One verifiable identity. run() returns an empty string on success and a
/// witness description (offending symbol/monomial) on failure.
struct Check {
  std::string id;
  std::string name;
  std::function<std::string()> run;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Executes a batch of independent checks. The parallel path distributes the
/// items over OpenMP threads; results are ordered by item index either way.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, bool parallel = true);
std::vector<CheckResult> run_checks_serial(const std::vector<Check>& checks);

struct Report {
  std::string suite;
  std::string cm;
  uint64_t seed = 0;
  int truncation = 0;
  std::vector<CheckResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  size_t fail_count() const {
    size_t n = 0;
    for (const auto& r : results)
      if (!r.pass) ++n;
    return n;
  }
};

std::string report_to_json(const Report& r);
void append_results(Report& r, const std::vector<CheckResult>& results);

}  // namespace hgt
