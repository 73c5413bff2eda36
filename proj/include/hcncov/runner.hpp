#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hcncov/coverage_sim.hpp"
#include "hcncov/curves.hpp"
#include "hcncov/network_params.hpp"

// Orchestration: resolve a run configuration (preset or JSON file), execute
// the requested tasks, and write the CSV artifacts plus a summary.json that
// echoes the resolved config and records analytic-vs-simulation gaps.

namespace hcncov::run {

enum class Task { DistZ2, CovMacro, CovSmall };

std::string_view task_label(Task t);  // dist_z2 / cov_macro / cov_small

struct RunConfig {
   NetworkParams params;
   std::vector<double> gammas_db;  // strictly increasing; defaults to -10..20 dB
   long trials           = 10000;  // 0 disables simulation outputs
   std::uint64_t seed    = 1;
   unsigned threads      = 1;
   sim::HoleMode hole_mode = sim::HoleMode::AllHoles;
   double window_radius  = 0.0;  // 0 picks the simulation default
   std::vector<Task> tasks;      // nonempty, no duplicates
   std::string output_dir = "out";
   bool dump_points       = false;
};

// Built-in parameter sets ("setup1", "setup2") with all three tasks enabled;
// throws ConfigError for any other name.
RunConfig config_from_preset(std::string_view name);

// Flat JSON keys mirroring RunConfig; densities are given in BS per km^2 and
// converted to per m^2 here. Unknown keys are rejected (ConfigError), as are
// type mismatches. Missing keys keep the preset defaults of setup 1.
RunConfig config_from_json_file(const std::string& path);
RunConfig config_from_json(const nlohmann::json& j);

// ConfigError on structural problems (no tasks, non-increasing gammas, bad
// trial/thread counts); InvalidParams on bad network parameters.
void validate(const RunConfig& cfg);

// Executes the configured tasks, writes <output_dir>/<task>.csv artifacts
// and summary.json, and returns the summary. The summary is checked against
// the embedded schema before it is written.
nlohmann::json run(const RunConfig& cfg);

// Structural check of a summary document; throws ConfigError on violations.
void validate_summary(const nlohmann::json& summary);

} // namespace hcncov::run
