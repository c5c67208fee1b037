#pragma once

#include <string>
#include <vector>

#include "levystore/simulate.hpp"

namespace levystore {

// Reference parameterization used across the built-in scenarios: stable up
// netput (unit output rate, Poisson(1/2) arrivals with exponential unit-mean
// work) and a pure-jump subordinator of the same jump law.
UpProcessSpec reference_up();
DownProcessSpec reference_down();

struct ScenarioEntry {
  std::string name;
  std::string description;
  Scenario scenario;
  int default_replicas = 20;
};

// Built-in scenarios:
//   A  single up period over the whole horizon (pk transform check)
//   B  renewal alternation, down Exp(1) / up Exp(3), occupancy 1/4
//   C  exhaustive service with Exp(1) vacations (up periods end at emptying)
//   D  polling-style deterministic cyclic schedule (switchover 0.5, visit 2)
const std::vector<ScenarioEntry>& scenario_registry();

// nullptr when the name is not registered
const ScenarioEntry* find_scenario(const std::string& name);

}  // namespace levystore
