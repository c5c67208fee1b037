#pragma once

#include <string>

#include <json.hpp>

#include "levystore/policy.hpp"
#include "levystore/process_spec.hpp"
#include "levystore/simulate.hpp"

namespace levystore {

// JSON forms. Field names are exact and unknown fields are rejected with the
// offending path:
//   jump law   {"family": "exponential", "mean": 1.0}
//              {"family": "deterministic", "value": 0.4}
//              {"family": "erlang", "shape": 2, "mean": 1.0}
//              {"family": "uniform", "lo": 0.0, "hi": 1.0}
//   up spec    {"drift": 1.0, "brownian_var": 0.0, "jump_rate": 0.5,
//               "jump_dist": {...}}
//   down spec  {"drift": 0.0, "jump_rate": 0.5, "jump_dist": {...}}

nlohmann::json to_json(const JumpDistribution& dist);
nlohmann::json to_json(const UpProcessSpec& spec);
nlohmann::json to_json(const DownProcessSpec& spec);
nlohmann::json to_json(const RegimePolicy& policy);
nlohmann::json to_json(const Scenario& scenario);

JumpDistribution jump_distribution_from_json(const nlohmann::json& j,
                                             const std::string& path);
UpProcessSpec up_spec_from_json(const nlohmann::json& j,
                                const std::string& path);
DownProcessSpec down_spec_from_json(const nlohmann::json& j,
                                    const std::string& path);
RegimePolicy policy_from_json(const nlohmann::json& j, const std::string& path);
Scenario scenario_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace levystore
