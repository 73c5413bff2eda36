#include "hcncov/coverage_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "hcncov/errors.hpp"
#include "hcncov/parallel.hpp"
#include "hcncov/rng.hpp"

namespace hcncov::sim {

namespace {

constexpr double kZ95 = 1.959963984540054;

std::atomic<long> g_redraws{0};

// Substream roles within one redraw attempt of one trial.
enum StreamRole : std::uint64_t {
   kMacroPoints = 0,
   kSmallPoints = 1,
   kMacroFades  = 2,
   kSmallFades  = 3,
};

std::uint64_t stream_id(long trial_id, int retry, StreamRole role)
{
   return static_cast<std::uint64_t>(trial_id) * 4 + role
          + (static_cast<std::uint64_t>(retry) << 40);
}

bool covered(const TrialRecord& r, Tier tier, double gamma)
{
   const double sir = tier == Tier::Macro ? r.sir_macro : r.sir_small;
   return sir >= gamma;
}

double distance_of(const TrialRecord& r, Tier tier)
{
   return tier == Tier::Macro ? r.z1 : r.z2hat;
}

} // namespace

double default_window_radius(const NetworkParams& p)
{
   return std::max({5.0 / std::sqrt(M_PI * p.lambda1), 10.0 * p.D, 2000.0});
}

TrialRecord sir_at_origin(std::span<const pp::Point> macros, std::span<const double> macro_fades,
                          std::span<const pp::Point> smalls, std::span<const double> small_fades,
                          const NetworkParams& p)
{
   validate(p);
   if(macros.size() != macro_fades.size() || smalls.size() != small_fades.size())
      throw InvalidParams("sir_at_origin: fade count must match point count");
   if(macros.empty() || smalls.empty())
      throw EmptySet("sir_at_origin: both tiers need at least one point");

   double i_total = 0.0;
   double c_srv1 = 0.0, c_srv2 = 0.0;
   double best1 = std::numeric_limits<double>::infinity();
   double best2 = best1;
   for(std::size_t i = 0; i < macros.size(); ++i) {
      const double d = std::hypot(macros[i].x, macros[i].y);
      const double c = p.P1 * macro_fades[i] * std::pow(d, -p.alpha);
      i_total += c;
      if(d < best1) {
         best1  = d;
         c_srv1 = c;
      }
   }
   for(std::size_t j = 0; j < smalls.size(); ++j) {
      const double d = std::hypot(smalls[j].x, smalls[j].y);
      const double c = p.P2 * small_fades[j] * std::pow(d, -p.alpha);
      i_total += c;
      if(d < best2) {
         best2  = d;
         c_srv2 = c;
      }
   }

   TrialRecord rec;
   rec.z1          = best1;
   rec.z2hat       = best2;
   const double i1 = i_total - c_srv1;
   const double i2 = i_total - c_srv2;
   rec.sir_macro   = i1 > 0.0 ? c_srv1 / i1 : std::numeric_limits<double>::infinity();
   rec.sir_small   = i2 > 0.0 ? c_srv2 / i2 : std::numeric_limits<double>::infinity();
   return rec;
}

TrialRecord run_trial(const SimConfig& cfg, long trial_id)
{
   const NetworkParams& p = cfg.params;
   validate(p);
   const double R = cfg.window_radius > 0.0 ? cfg.window_radius : default_window_radius(p);

   for(int retry = 0; retry <= cfg.max_redraws; ++retry) {
      if(retry > 0) g_redraws.fetch_add(1, std::memory_order_relaxed);
      // Macro window is widened by D so holes cut by just-outside macros
      // still reach the small-cell window.
      auto macro_eng  = make_engine({cfg.seed, stream_id(trial_id, retry, kMacroPoints)});
      const auto phi1 = pp::sample_ppp(p.lambda1, R + p.D, macro_eng);
      auto small_eng  = make_engine({cfg.seed, stream_id(trial_id, retry, kSmallPoints)});
      const auto base = pp::sample_ppp(p.lambda2, R, small_eng);

      // Fades are indexed by the pre-carve pattern so both hole modes share
      // realizations point by point.
      auto mfade_eng = make_engine({cfg.seed, stream_id(trial_id, retry, kMacroFades)});
      std::vector<double> h1(phi1.points.size());
      for(double& h : h1) h = exp_unit(mfade_eng);
      auto sfade_eng = make_engine({cfg.seed, stream_id(trial_id, retry, kSmallFades)});
      std::vector<double> h2(base.points.size());
      for(double& h : h2) h = exp_unit(sfade_eng);

      if(phi1.points.empty()) continue;

      std::size_t srv1 = 0;
      double best1     = std::numeric_limits<double>::infinity();
      for(std::size_t i = 0; i < phi1.points.size(); ++i) {
         const double d = std::hypot(phi1.points[i].x, phi1.points[i].y);
         if(d < best1) {
            best1 = d;
            srv1  = i;
         }
      }

      const std::vector<pp::Point> holes =
          cfg.hole_mode == HoleMode::AllHoles ? phi1.points
                                              : std::vector<pp::Point>{phi1.points[srv1]};

      // Carving by index keeps each surviving point paired with its fade.
      std::vector<pp::Point> kept;
      std::vector<double> kept_fades;
      kept.reserve(base.points.size());
      kept_fades.reserve(base.points.size());
      for(std::size_t j = 0; j < base.points.size(); ++j) {
         const auto& q = base.points[j];
         bool removed  = false;
         for(const auto& hc : holes) {
            const double dx = q.x - hc.x, dy = q.y - hc.y;
            if(dx * dx + dy * dy < p.D * p.D) {
               removed = true;
               break;
            }
         }
         if(!removed) {
            kept.push_back(q);
            kept_fades.push_back(h2[j]);
         }
      }
      if(kept.empty()) continue;

      return sir_at_origin(phi1.points, h1, kept, kept_fades, p);
   }
   throw EmptyTier("run_trial: window produced an empty tier in every redraw");
}

long redraw_count()
{
   return g_redraws.load();
}

std::vector<TrialRecord> run_trials(const SimConfig& cfg)
{
   if(cfg.trials < 0) throw InvalidParams("run_trials: trials must be >= 0");
   std::vector<TrialRecord> out(static_cast<std::size_t>(cfg.trials));
   parallel_for(out.size(), cfg.threads,
                [&](std::size_t i) { out[i] = run_trial(cfg, static_cast<long>(i)); });
   return out;
}

Estimate coverage_estimate(std::span<const TrialRecord> recs, Tier tier, double gamma)
{
   if(recs.empty()) throw EmptySet("coverage_estimate: no trials");
   const double n = static_cast<double>(recs.size());
   double count    = 0.0;
   for(const auto& r : recs) count += covered(r, tier, gamma) ? 1.0 : 0.0;
   const double phat = count / n;

   double hw;
   if(count <= 5.0 || count >= n - 5.0) {
      // Wilson interval half-width; stays meaningful at the boundaries.
      const double z2 = kZ95 * kZ95;
      hw = kZ95 * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
   } else {
      hw = kZ95 * std::sqrt(phat * (1.0 - phat) / n);
   }
   return {phat, hw, static_cast<long>(recs.size())};
}

CoverageCurve coverage_curve(std::span<const TrialRecord> recs, Tier tier,
                             std::span<const double> gammas_db)
{
   CoverageCurve c;
   c.method = CurveMethod::MonteCarlo;
   c.gammas_db.assign(gammas_db.begin(), gammas_db.end());
   c.values.reserve(gammas_db.size());
   c.ci_halfwidth.reserve(gammas_db.size());
   for(double db : gammas_db) {
      const auto est = coverage_estimate(recs, tier, db_to_linear(db));
      c.values.push_back(est.value);
      c.ci_halfwidth.push_back(est.ci_halfwidth);
   }
   return c;
}

CoverageCurve estimate_coverage(Tier tier, std::span<const double> gammas_db,
                                const SimConfig& cfg)
{
   const auto recs = run_trials(cfg);
   return coverage_curve(recs, tier, gammas_db);
}

DistanceCdf empirical_distance_cdf(std::span<const TrialRecord> recs, Tier tier,
                                   std::size_t grid_points)
{
   if(recs.empty()) throw EmptySet("empirical_distance_cdf: no trials");
   if(grid_points == 0) throw ArgumentOutOfRange("empirical_distance_cdf: grid_points == 0");
   std::vector<double> d(recs.size());
   for(std::size_t i = 0; i < recs.size(); ++i) d[i] = distance_of(recs[i], tier);
   std::sort(d.begin(), d.end());

   const std::size_t qi = std::min(d.size() - 1,
                                   static_cast<std::size_t>(0.999 * static_cast<double>(d.size())));
   const double hi = d[qi] > 0.0 ? d[qi] : d.back();

   DistanceCdf out;
   out.r.reserve(grid_points);
   out.cdf.reserve(grid_points);
   const double n = static_cast<double>(d.size());
   for(std::size_t k = 1; k <= grid_points; ++k) {
      const double r = hi * static_cast<double>(k) / static_cast<double>(grid_points);
      const auto it  = std::upper_bound(d.begin(), d.end(), r);
      out.r.push_back(r);
      out.cdf.push_back(static_cast<double>(it - d.begin()) / n);
   }
   return out;
}

} // namespace hcncov::sim
