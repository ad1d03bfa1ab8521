#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridra/grid_model.hpp"
#include "gridra/synthetic.hpp"

namespace gridra {

/// A scenario file plus everything needed to reproduce the run: raw bytes fed
/// into the input digest, the resolved traces, and any notes the file or the
/// loader attached (illustrative plan values, defaulted standards, ...).
struct LoadedScenario {
  GridScenario scenario;
  std::vector<std::string> notes;
  bool plans_illustrative = false;
  bool lole_standard_defaulted = false;
  std::string source_path;
  std::uint64_t input_digest = 0;
  std::optional<SyntheticTraceSpec> synthetic;  // set when traces were generated
};

/// Dotted-path override applied to the scenario document before it is
/// interpreted, e.g. {"derating.storage", "0.0"} or
/// {"demand.model", "linear"}. Values parse as JSON when possible and fall
/// back to strings.
struct ScenarioOverride {
  std::string path;
  std::string value;
};

/// Loads a scenario JSON document. Relative trace paths resolve against the
/// scenario file's directory. The `traces` section carries either
/// {"csv": <path>} or {"synthetic": {...}} plus the base-year scalars.
LoadedScenario load_scenario(const std::string& path,
                             const std::vector<ScenarioOverride>& overrides = {});

LoadedScenario load_scenario_from_string(const std::string& document,
                                         const std::string& base_dir,
                                         const std::vector<ScenarioOverride>& overrides = {});

/// FNV-1a 64-bit, the digest used for run manifests.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace gridra
