#include "hgt/report.hpp"

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgt {

std::vector<CheckResult> run_checks_serial(const std::vector<Check>& checks) {
  std::vector<CheckResult> out(checks.size());
  for (size_t i = 0; i < checks.size(); ++i) {
    std::string witness = checks[i].run();
    out[i] = {checks[i].id, checks[i].name, witness.empty(), witness};
  }
  return out;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, bool parallel) {
  if (!parallel) return run_checks_serial(checks);
  std::vector<CheckResult> out(checks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(checks.size()); ++i) {
    size_t k = static_cast<size_t>(i);
    std::string witness = checks[k].run();
    out[k] = {checks[k].id, checks[k].name, witness.empty(), witness};
  }
  return out;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["suite"] = r.suite;
  j["crossed_module"] = r.cm;
  j["seed"] = r.seed;
  j["truncation"] = r.truncation;
  j["total"] = r.results.size();
  j["failed"] = r.fail_count();
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : r.results) {
    nlohmann::ordered_json o;
    o["id"] = item.id;
    o["name"] = item.name;
    o["status"] = item.pass ? "pass" : "fail";
    if (!item.pass) o["witness"] = item.witness;
    j["items"].push_back(o);
  }
  return j.dump(2);
}

void append_results(Report& r, const std::vector<CheckResult>& results) {
  r.results.insert(r.results.end(), results.begin(), results.end());
}

}  // namespace hgt
