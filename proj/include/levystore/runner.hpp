#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "levystore/decomposition.hpp"
#include "levystore/estimators.hpp"
#include "levystore/simulate.hpp"

namespace levystore {

struct Tolerances {
  double se_multiplier = 3.0;
  double abs_floor = 1e-3;
};

struct RunConfig {
  Scenario scenario;
  std::string scenario_name;  // registry name, empty for inline scenarios
  int replicas = 20;
  std::vector<double> alpha_grid = {0.0, 0.25, 0.5, 1.0, 2.0};
  double burn_in_fraction = 0.1;
  Tolerances tolerances;
  std::string output_dir = "levystore_out";
  bool emit_paths = false;

  void validate() const;
  EstimatorOptions estimator_options() const {
    return {burn_in_fraction, 20};
  }
};

// Parses and validates a config document; every violation carries the field
// path and the violated rule. The "scenario" member is either an inline
// object or the name of a registry scenario.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& file);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

// Everything measured on one replica path, on a fixed alpha grid.
struct ReplicaStats {
  std::vector<double> lst_w, lst_w_se;
  std::vector<double> lst_wd, lst_wd_se;
  std::vector<double> lst_s, lst_s_se;
  std::vector<double> lst_t, lst_t_se;
  std::vector<double> martingale, martingale_se;  // 0 at alpha = 0
  std::vector<double> delta, delta_se;            // 0 at alpha = 0
  bool has_down = false;
  bool has_embedded = false;
  bool has_delta = false;
  double p_d = 0.0;
  double ew_s = 0.0, ew_t = 0.0;
  double l_over_t = 0.0, w_over_t = 0.0;
  std::size_t cycle_count = 0;
};

ReplicaStats compute_replica_stats(const Scenario& scenario,
                                   std::span<const double> alphas,
                                   const EstimatorOptions& opts);

// Replica means with across-replica standard errors (internal single-path
// errors are used when only one replica ran). Replica r runs with seed
// replica_seed(scenario.seed, r); the reduction is ordered by replica index.
struct AggregateStats {
  std::vector<double> alphas;
  std::vector<MeanSe> lst_w, lst_wd, lst_s, lst_t, martingale, delta;
  MeanSe p_d, ew_s, ew_t, l_over_t, w_over_t;
  bool has_down = false, has_embedded = false, has_delta = false;
  int replicas = 0;
  double mean_cycles = 0.0;
};

AggregateStats simulate_replicas(const Scenario& scenario, int replicas,
                                 std::span<const double> alphas,
                                 const EstimatorOptions& opts,
                                 const std::optional<std::filesystem::path>&
                                     paths_dir = std::nullopt);

struct CriterionResult {
  std::string name;
  std::optional<double> alpha;
  double value = 0.0;
  double target = 0.0;
  double se = 0.0;
  double se_multiplier = 3.0;
  double abs_floor = 1e-3;
  bool pass = true;
  std::string note;

  double tolerance() const {
    const double by_se = se_multiplier * se;
    return by_se > abs_floor ? by_se : abs_floor;
  }
};

struct RunResult {
  bool all_pass = true;
  std::vector<CriterionResult> criteria;
  DecompositionReport report;
  AggregateStats stats;
};

// Builds the criteria and the decomposition report from aggregated
// statistics (no simulation, no I/O).
RunResult evaluate_run(const RunConfig& config, const AggregateStats& stats);

// Full pipeline: simulate replicas, aggregate, evaluate all residual
// families, and write the CSV/JSON artifacts into config.output_dir.
RunResult run(const RunConfig& config);

struct VerifyResult {
  int exit_code = 0;  // 0 criteria pass, 1 at least one fails
  std::vector<std::string> messages;
};

// Re-evaluates the pass flags of a stored report from its numbers alone (no
// resimulation). Structural problems (missing files, misaligned grids,
// inconsistent stored flags) throw Error(malformed_report).
VerifyResult verify_report(const std::filesystem::path& report_dir);

}  // namespace levystore
