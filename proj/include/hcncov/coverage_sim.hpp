#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcncov/curves.hpp"
#include "hcncov/network_params.hpp"
#include "hcncov/point_process.hpp"

// Monte Carlo oracle for the analytic evaluators. Each trial synthesizes one
// network realization around the typical user at the origin, attaches
// Rayleigh fades, and records the serving distances and SIRs of both tiers.
// Records are a pure function of (seed, trial index), so runs are
// bit-identical across thread counts and repeated invocations.

namespace hcncov::sim {

enum class Tier { Macro, Small };

// AllHoles carves the exclusion disc of every macro out of the small-cell
// field (the actual hole process); ClosestHoleOnly carves only the serving
// macro's disc, matching the approximation the small-tier serving-distance
// law is built on.
enum class HoleMode { AllHoles, ClosestHoleOnly };

struct SimConfig {
   NetworkParams params;
   std::uint64_t seed   = 1;
   long trials          = 10000;
   HoleMode hole_mode   = HoleMode::AllHoles;
   double window_radius = 0.0;  // m; 0 picks default_window_radius(params)
   unsigned threads     = 1;    // 0 picks the hardware count
   int max_redraws      = 64;   // redraws before EmptyTier is thrown
};

// max(5 / sqrt(pi lambda1), 10 D, 2000): at least five mean macro distances,
// well past the hole geometry, and never below 2 km.
double default_window_radius(const NetworkParams& p);

struct TrialRecord {
   double z1        = 0.0;  // serving macro distance, m
   double z2hat     = 0.0;  // serving small-cell distance after carving, m
   double sir_macro = 0.0;  // linear; may be +inf if interference vanishes
   double sir_small = 0.0;
};

// Fade-injection surface: computes both closed-access SIRs for an explicit
// pattern (macros, carved small cells) with explicit per-link fades. The
// serving BS of each tier is its nearest point; interference is every other
// point of both tiers. Throws EmptySet when a tier is empty and
// InvalidParams on size mismatches.
TrialRecord sir_at_origin(std::span<const pp::Point> macros, std::span<const double> macro_fades,
                          std::span<const pp::Point> smalls, std::span<const double> small_fades,
                          const NetworkParams& p);

// One realization; trial_id keys the random substreams. Fades are attached
// to the baseline small-cell pattern before carving, so the two hole modes
// see identical realizations wherever their patterns agree.
TrialRecord run_trial(const SimConfig& cfg, long trial_id);

std::vector<TrialRecord> run_trials(const SimConfig& cfg);

// Cumulative number of redraws caused by an empty tier (counted across all
// run_trial calls in this process).
long redraw_count();

struct Estimate {
   double value        = 0.0;
   double ci_halfwidth = 0.0;  // 95%
   long trials         = 0;
};

// Empirical coverage P(SIR >= gamma) with a normal-approximation interval;
// switches to the Wilson interval when the count is within 5 of 0 or n.
Estimate coverage_estimate(std::span<const TrialRecord> recs, Tier tier, double gamma);

CoverageCurve coverage_curve(std::span<const TrialRecord> recs, Tier tier,
                             std::span<const double> gammas_db);

// run_trials + coverage_curve in one call; a single batch of records serves
// every threshold.
CoverageCurve estimate_coverage(Tier tier, std::span<const double> gammas_db,
                                const SimConfig& cfg);

// Serving-distance empirical CDF on a uniform grid reaching the 99.9th
// percentile of the samples.
DistanceCdf empirical_distance_cdf(std::span<const TrialRecord> recs, Tier tier,
                                   std::size_t grid_points = 512);

} // namespace hcncov::sim
