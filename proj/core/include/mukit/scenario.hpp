#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mukit/json_io.hpp"

namespace mukit::scenarios {

using nlohmann::json;

struct Outcome {
  std::string name;
  bool pass = false;
  json inputs;
  json outputs;
  json tolerances;
};

/// A named, seeded regression: fixed parameters, an expected quantity with a
/// pinned tolerance, and a runner mapping parameters to a pass/fail outcome.
struct Scenario {
  std::string name;
  std::string summary;
  json defaults;  // parameters merged with caller overrides; includes expected/tol
  std::function<Outcome(const json& params, std::uint64_t seed)> run;
};

const std::vector<Scenario>& registry();

const Scenario* find(const std::string& name);

/// Runs one scenario with overrides patched over its default parameters.
/// Throws std::invalid_argument for unknown names.
Outcome run_scenario(const std::string& name, const json& overrides = json::object(),
                     std::uint64_t root_seed = kDefaultSeed);

/// Registry dump: name, summary, expected values.
json list_json(const std::string& filter = "");

}  // namespace mukit::scenarios
