#include "hcncov/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>

#include "hcncov/coverage_analytic.hpp"
#include "hcncov/errors.hpp"
#include "hcncov/io.hpp"
#include "hcncov/point_process.hpp"
#include "hcncov/rng.hpp"
#include "hcncov/serving_distance.hpp"

namespace hcncov::run {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view task_label(Task t)
{
   switch(t) {
      case Task::DistZ2: return "dist_z2";
      case Task::CovMacro: return "cov_macro";
      case Task::CovSmall: return "cov_small";
   }
   return "?";
}

namespace {

Task task_from_label(const std::string& s)
{
   if(s == "dist_z2") return Task::DistZ2;
   if(s == "cov_macro") return Task::CovMacro;
   if(s == "cov_small") return Task::CovSmall;
   throw ConfigError("unknown task: " + s);
}

sim::HoleMode hole_mode_from_label(const std::string& s)
{
   if(s == "all_holes") return sim::HoleMode::AllHoles;
   if(s == "closest_hole_only") return sim::HoleMode::ClosestHoleOnly;
   throw ConfigError("unknown hole_mode: " + s);
}

std::string_view hole_mode_label(sim::HoleMode m)
{
   return m == sim::HoleMode::AllHoles ? "all_holes" : "closest_hole_only";
}

json config_to_json(const RunConfig& cfg)
{
   json tasks = json::array();
   for(Task t : cfg.tasks) tasks.push_back(std::string(task_label(t)));
   return {
       {"lambda1_per_km2", cfg.params.lambda1 * 1e6},
       {"lambda2_per_km2", cfg.params.lambda2 * 1e6},
       {"D_m", cfg.params.D},
       {"alpha", cfg.params.alpha},
       {"P1", cfg.params.P1},
       {"P2", cfg.params.P2},
       {"gammas_db", cfg.gammas_db},
       {"trials", cfg.trials},
       {"seed", cfg.seed},
       {"threads", cfg.threads},
       {"hole_mode", std::string(hole_mode_label(cfg.hole_mode))},
       {"window_radius_m", cfg.window_radius},
       {"tasks", tasks},
       {"output_dir", cfg.output_dir},
       {"dump_points", cfg.dump_points},
   };
}

double elapsed_ms(std::chrono::steady_clock::time_point t0)
{
   return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
       .count();
}

} // namespace

RunConfig config_from_preset(std::string_view name)
{
   RunConfig cfg;
   if(name == "setup1")
      cfg.params = setup1();
   else if(name == "setup2")
      cfg.params = setup2();
   else
      throw ConfigError("unknown preset: " + std::string(name));
   cfg.gammas_db = default_gamma_grid_db();
   cfg.tasks     = {Task::DistZ2, Task::CovMacro, Task::CovSmall};
   return cfg;
}

RunConfig config_from_json(const json& j)
{
   if(!j.is_object()) throw ConfigError("config root must be a JSON object");
   RunConfig cfg = config_from_preset("setup1");

   try {
      for(const auto& [key, val] : j.items()) {
         if(key == "lambda1_per_km2")
            cfg.params.lambda1 = val.get<double>() * 1e-6;
         else if(key == "lambda2_per_km2")
            cfg.params.lambda2 = val.get<double>() * 1e-6;
         else if(key == "D_m")
            cfg.params.D = val.get<double>();
         else if(key == "alpha")
            cfg.params.alpha = val.get<double>();
         else if(key == "P1")
            cfg.params.P1 = val.get<double>();
         else if(key == "P2")
            cfg.params.P2 = val.get<double>();
         else if(key == "gammas_db")
            cfg.gammas_db = val.get<std::vector<double>>();
         else if(key == "trials")
            cfg.trials = val.get<long>();
         else if(key == "seed")
            cfg.seed = val.get<std::uint64_t>();
         else if(key == "threads")
            cfg.threads = val.get<unsigned>();
         else if(key == "hole_mode")
            cfg.hole_mode = hole_mode_from_label(val.get<std::string>());
         else if(key == "window_radius_m")
            cfg.window_radius = val.get<double>();
         else if(key == "tasks") {
            cfg.tasks.clear();
            for(const auto& t : val) cfg.tasks.push_back(task_from_label(t.get<std::string>()));
         } else if(key == "output_dir")
            cfg.output_dir = val.get<std::string>();
         else if(key == "dump_points")
            cfg.dump_points = val.get<bool>();
         else
            throw ConfigError("unknown config key: " + key);
      }
   } catch(const json::exception& e) {
      throw ConfigError(std::string("config value error: ") + e.what());
   }
   return cfg;
}

RunConfig config_from_json_file(const std::string& path)
{
   std::ifstream in(path);
   if(!in) throw ConfigError("cannot open config file: " + path);
   json j;
   try {
      in >> j;
   } catch(const json::exception& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
   }
   return config_from_json(j);
}

void validate(const RunConfig& cfg)
{
   hcncov::validate(cfg.params);  // InvalidParams on violation
   if(cfg.tasks.empty()) throw ConfigError("tasks must be nonempty");
   for(std::size_t i = 0; i < cfg.tasks.size(); ++i)
      for(std::size_t k = i + 1; k < cfg.tasks.size(); ++k)
         if(cfg.tasks[i] == cfg.tasks[k])
            throw ConfigError("duplicate task: " + std::string(task_label(cfg.tasks[i])));
   if(cfg.gammas_db.empty()) throw ConfigError("gammas_db must be nonempty");
   for(std::size_t i = 0; i + 1 < cfg.gammas_db.size(); ++i)
      if(!(cfg.gammas_db[i] < cfg.gammas_db[i + 1]))
         throw ConfigError("gammas_db must be strictly increasing");
   for(double g : cfg.gammas_db)
      if(!std::isfinite(g)) throw ConfigError("gammas_db entries must be finite");
   if(cfg.trials < 0) throw ConfigError("trials must be >= 0");
   if(!(cfg.window_radius >= 0.0) || !std::isfinite(cfg.window_radius))
      throw ConfigError("window_radius_m must be finite and >= 0");
   if(cfg.output_dir.empty()) throw ConfigError("output_dir must be nonempty");
}

namespace {

// Lazily shared Monte Carlo batch: every task of one run sees the same
// records.
class TrialBatch {
 public:
   explicit TrialBatch(const RunConfig& cfg) : cfg_(cfg) {}

   const std::vector<sim::TrialRecord>* get()
   {
      if(cfg_.trials == 0) return nullptr;
      if(!recs_) {
         sim::SimConfig sc;
         sc.params        = cfg_.params;
         sc.seed          = cfg_.seed;
         sc.trials        = cfg_.trials;
         sc.hole_mode     = cfg_.hole_mode;
         sc.window_radius = cfg_.window_radius;
         sc.threads       = cfg_.threads;
         recs_            = sim::run_trials(sc);
      }
      return &*recs_;
   }

 private:
   const RunConfig& cfg_;
   std::optional<std::vector<sim::TrialRecord>> recs_;
};

double max_abs_diff(std::span<const double> a, std::span<const double> b)
{
   double m = 0.0;
   for(std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
   return m;
}

json curve_gap_entry(const CoverageCurve& analytic, const CoverageCurve* mc)
{
   json e;
   e["max_abs_diff_vs_mc"] = mc ? json(max_abs_diff(analytic.values, mc->values)) : json();
   return e;
}

json run_dist_task(const RunConfig& cfg, TrialBatch& batch, const std::string& dir)
{
   const auto t0 = std::chrono::steady_clock::now();
   const auto& p = cfg.params;

   constexpr std::size_t n = 512;
   const double z_hi = std::sqrt(p.D * p.D + std::log(1e3) / (M_PI * p.lambda2));
   std::vector<double> z(n), pdf(n), surv(n);
   for(std::size_t k = 0; k < n; ++k) {
      z[k]    = z_hi * static_cast<double>(k + 1) / static_cast<double>(n);
      pdf[k]  = dist::marginal_pdf_z2hat(z[k], p);
      surv[k] = 1.0 - dist::marginal_cdf_z2hat(z[k], p);
   }
   io::write_distance_law_csv(dir + "/dist_z2.csv", z, pdf, surv);

   json entry;
   entry["grid_points"] = n;
   entry["ks_vs_mc"]    = json();
   if(const auto* recs = batch.get()) {
      const auto ecdf = sim::empirical_distance_cdf(*recs, sim::Tier::Small);
      io::write_distance_cdf_csv(dir + "/dist_z2_ecdf.csv", ecdf);
      double ks = 0.0;
      for(std::size_t i = 0; i < ecdf.r.size(); ++i)
         ks = std::max(ks, std::abs(dist::marginal_cdf_z2hat(ecdf.r[i], p) - ecdf.cdf[i]));
      entry["ks_vs_mc"] = ks;
   }
   entry["wall_ms"] = elapsed_ms(t0);
   return entry;
}

json run_coverage_task(const RunConfig& cfg, TrialBatch& batch, const std::string& dir,
                       Task task)
{
   const auto t0 = std::chrono::steady_clock::now();

   const bool macro = task == Task::CovMacro;
   const auto pair  = macro ? cov::macro_coverage_curves(cfg.gammas_db, cfg.params, cfg.threads)
                            : cov::small_coverage_curves(cfg.gammas_db, cfg.params, cfg.threads);

   std::vector<CoverageCurve> curves{pair.first, pair.second};
   const CoverageCurve* mc = nullptr;
   if(const auto* recs = batch.get()) {
      curves.push_back(sim::coverage_curve(*recs, macro ? sim::Tier::Macro : sim::Tier::Small,
                                           cfg.gammas_db));
      mc = &curves.back();
   }
   io::write_coverage_csv(dir + "/" + std::string(task_label(task)) + ".csv", curves);

   json entry;
   json curve_gaps;
   curve_gaps[std::string(method_label(pair.first.method))]  = curve_gap_entry(pair.first, mc);
   curve_gaps[std::string(method_label(pair.second.method))] = curve_gap_entry(pair.second, mc);
   entry["curves"]                = curve_gaps;
   entry["mc_max_ci_halfwidth"] = mc ? json(*std::max_element(mc->ci_halfwidth.begin(),
                                                              mc->ci_halfwidth.end()))
                                     : json();
   entry["wall_ms"] = elapsed_ms(t0);
   return entry;
}

void dump_points(const RunConfig& cfg, const std::string& dir)
{
   // One labeled realization, independent of the trial substreams.
   const double R = cfg.window_radius > 0.0 ? cfg.window_radius
                                            : sim::default_window_radius(cfg.params);
   auto eng1       = make_engine({cfg.seed, std::uint64_t(1) << 60});
   const auto phi1 = pp::sample_ppp(cfg.params.lambda1, R + cfg.params.D, eng1);
   auto eng2       = make_engine({cfg.seed, (std::uint64_t(1) << 60) + 1});
   const auto base = pp::sample_ppp(cfg.params.lambda2, R, eng2);
   const auto phi2 = pp::carve_php(base, phi1.points, cfg.params.D);
   io::write_points_csv(dir + "/points_phi1.csv", phi1);
   io::write_points_csv(dir + "/points_phi2.csv", phi2);
}

} // namespace

json run(const RunConfig& cfg)
{
   validate(cfg);

   std::error_code ec;
   fs::create_directories(cfg.output_dir, ec);
   if(ec) throw IoError("cannot create output directory: " + cfg.output_dir);

   TrialBatch batch(cfg);
   json tasks_out = json::object();
   for(Task t : cfg.tasks) {
      switch(t) {
         case Task::DistZ2:
            tasks_out["dist_z2"] = run_dist_task(cfg, batch, cfg.output_dir);
            break;
         case Task::CovMacro:
            tasks_out["cov_macro"] = run_coverage_task(cfg, batch, cfg.output_dir, t);
            break;
         case Task::CovSmall:
            tasks_out["cov_small"] = run_coverage_task(cfg, batch, cfg.output_dir, t);
            break;
      }
   }
   if(cfg.dump_points) dump_points(cfg, cfg.output_dir);

   json summary;
   summary["schema_version"] = 1;
   summary["config"]         = config_to_json(cfg);
   summary["truncation"]     = {
       {"z1_m", dist::z1_truncation_radius(cfg.params.lambda1)},
       {"z2hat_m", std::sqrt(cfg.params.D * cfg.params.D
                             + std::log(1e18) / (M_PI * cfg.params.lambda2))},
       {"window_radius_m", cfg.window_radius > 0.0 ? cfg.window_radius
                                                   : sim::default_window_radius(cfg.params)},
   };
   summary["tasks"]    = tasks_out;
   summary["counters"] = {
       {"redraws", sim::redraw_count()},
       {"clamped_values", cov::clamp_warning_count()},
   };
   validate_summary(summary);

   const std::string path = cfg.output_dir + "/summary.json";
   std::ofstream out(path, std::ios::binary);
   if(!out) throw IoError("cannot open for writing: " + path);
   out << summary.dump(2) << '\n';
   out.flush();
   if(!out) throw IoError("write failed: " + path);
   return summary;
}

void validate_summary(const json& s)
{
   // Embedded schema: key -> required JSON kind, "?" marking number-or-null.
   auto need = [](const json& obj, const char* key, char kind) {
      if(!obj.is_object() || !obj.contains(key))
         throw ConfigError(std::string("summary schema: missing key ") + key);
      const json& v = obj.at(key);
      const bool ok = kind == 'n'   ? v.is_number()
                      : kind == '?' ? (v.is_number() || v.is_null())
                      : kind == 'o' ? v.is_object()
                      : kind == 'a' ? v.is_array()
                                    : false;
      if(!ok) throw ConfigError(std::string("summary schema: bad type for ") + key);
   };

   need(s, "schema_version", 'n');
   need(s, "config", 'o');
   need(s, "truncation", 'o');
   need(s, "tasks", 'o');
   need(s, "counters", 'o');
   need(s.at("truncation"), "z1_m", 'n');
   need(s.at("truncation"), "z2hat_m", 'n');
   need(s.at("truncation"), "window_radius_m", 'n');
   need(s.at("counters"), "redraws", 'n');
   need(s.at("counters"), "clamped_values", 'n');
   need(s.at("config"), "gammas_db", 'a');
   need(s.at("config"), "tasks", 'a');

   for(const auto& [name, entry] : s.at("tasks").items()) {
      need(entry, "wall_ms", 'n');
      if(name == "dist_z2") {
         need(entry, "grid_points", 'n');
         need(entry, "ks_vs_mc", '?');
      } else if(name == "cov_macro" || name == "cov_small") {
         need(entry, "curves", 'o');
         need(entry, "mc_max_ci_halfwidth", '?');
         for(const auto& [label, gap] : entry.at("curves").items()) {
            (void)label;
            need(gap, "max_abs_diff_vs_mc", '?');
         }
      } else {
         throw ConfigError("summary schema: unknown task entry " + name);
      }
   }
}

} // namespace hcncov::run
