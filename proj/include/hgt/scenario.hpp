#pragma once

#include <iosfwd>

#include "hgt/cocycle.hpp"

namespace hgt {

/// Crossed-module definition files: dimensions, structure constants,
/// representation matrices, the taudot matrix, the action kind, and body
/// models. The loader validates every structural invariant before use.
CrossedModule load_crossed_module_json(const std::string& text);
CrossedModule load_crossed_module_file(const std::string& path);
std::string crossed_module_to_json(const CrossedModule& cm);

/// Resolves either a shipped id (CM-T, CM-C, CM-A, CM-H) or a file path.
CrossedModule resolve_crossed_module(const std::string& id_or_path);

/// Scenario files drive the cover/cocycle pipeline: crossed module, cover
/// nerve size, truncation, seed, specialty, optional explicit coefficient
/// assignments, and a record of applied transforms.
struct Scenario {
  std::string cm_id = "CM-C";
  size_t patches = 3;
  size_t base_dim = 2;
  int truncation = 6;
  uint64_t seed = 1;
  int bodies = 3;
  bool special = false;
  std::vector<std::pair<std::string, Rational>> assignments;  // symbol name -> value
  // applied paraequivalence transforms: (equivalence index, inverted)
  std::vector<std::pair<size_t, bool>> transforms;
};

Scenario load_scenario_json(const std::string& text);
Scenario load_scenario_file(const std::string& path);
std::string scenario_to_json(const Scenario& s);

/// Builds the cover for a scenario and replays its recorded transforms.
struct ScenarioRun {
  std::unique_ptr<CoverModel> cover;
  ParaData data;
  std::vector<std::map<SymId, Rational>> bodies;
};
ScenarioRun run_scenario(const CrossedModule& cm, const Scenario& s);

}  // namespace hgt
