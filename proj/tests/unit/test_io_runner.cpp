#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hcncov/errors.hpp"
#include "hcncov/io.hpp"
#include "hcncov/runner.hpp"

using namespace hcncov;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path)
{
   std::ifstream in(path, std::ios::binary);
   REQUIRE(in);
   std::stringstream ss;
   ss << in.rdbuf();
   return ss.str();
}

struct TempDir {
   fs::path path;
   TempDir(const char* tag)
   {
      path = fs::temp_directory_path() / (std::string("hcncov_test_") + tag);
      fs::remove_all(path);
      fs::create_directories(path);
   }
   ~TempDir() { fs::remove_all(path); }
   std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("double formatting is stable and compact")
{
   CHECK(io::format_double(0.0) == "0");
   CHECK(io::format_double(1.5) == "1.5");
   CHECK(io::format_double(1e-6) == "1e-06");
   CHECK(io::format_double(0.234438730521) == "0.234438730521");
}

TEST_CASE("coverage CSV layout, empty ci for analytic rows")
{
   TempDir tmp("csv");
   CoverageCurve analytic{{0.0, 1.0}, {0.5, 0.4}, CurveMethod::MacroLower, {}};
   CoverageCurve mc{{0.0, 1.0}, {0.52, 0.41}, CurveMethod::MonteCarlo, {0.01, 0.02}};
   const std::string path = tmp.str() + "/c.csv";
   io::write_coverage_csv(path, std::vector<CoverageCurve>{analytic, mc});
   CHECK(slurp(path)
         == "gamma_dB,value,method,ci_halfwidth\n"
            "0,0.5,T1_lower,\n"
            "1,0.4,T1_lower,\n"
            "0,0.52,MC,0.01\n"
            "1,0.41,MC,0.02\n");
}

TEST_CASE("points and distance CSV headers")
{
   TempDir tmp("csv2");
   pp::PointSet set;
   set.points = {{1.0, -2.0}};
   io::write_points_csv(tmp.str() + "/p.csv", set);
   CHECK(slurp(tmp.str() + "/p.csv") == "x_m,y_m\n1,-2\n");

   const std::vector<double> z{1.0}, pdf{0.25}, surv{0.75};
   io::write_distance_law_csv(tmp.str() + "/d.csv", z, pdf, surv);
   CHECK(slurp(tmp.str() + "/d.csv") == "z_m,pdf_per_m,survival\n1,0.25,0.75\n");

   DistanceCdf cdf{{2.0}, {0.8}};
   io::write_distance_cdf_csv(tmp.str() + "/e.csv", cdf);
   CHECK(slurp(tmp.str() + "/e.csv") == "r_m,cdf\n2,0.8\n");
}

TEST_CASE("csv writers reject ragged columns and bad paths")
{
   const std::vector<double> a{1.0, 2.0}, b{1.0};
   CHECK_THROWS_AS(io::write_distance_law_csv("/tmp/x.csv", a, b, a), ArgumentOutOfRange);
   CHECK_THROWS_AS(io::write_points_csv("/nonexistent_dir_zz/p.csv", {}), IoError);
}

TEST_CASE("presets carry the documented parameters")
{
   const auto c1 = run::config_from_preset("setup1");
   CHECK(c1.params.lambda1 == doctest::Approx(1e-6));
   CHECK(c1.params.lambda2 == doctest::Approx(5e-5));
   CHECK(c1.params.D == 50.0);
   CHECK(c1.params.alpha == 4.0);
   CHECK(c1.params.P1 == 1000.0);
   CHECK(c1.params.P2 == 1.0);
   CHECK(c1.gammas_db.size() == 31);
   CHECK(c1.tasks.size() == 3);

   const auto c2 = run::config_from_preset("setup2");
   CHECK(c2.params.lambda2 == doctest::Approx(2.5e-5));
   CHECK(c2.params.D == 200.0);
   CHECK(c2.params.P1 == 100.0);

   CHECK_THROWS_AS(run::config_from_preset("setup3"), ConfigError);
}

TEST_CASE("json config parsing with unit conversion")
{
   const auto j = nlohmann::json::parse(R"({
      "lambda1_per_km2": 2.0,
      "lambda2_per_km2": 30.0,
      "D_m": 75.0,
      "alpha": 3.5,
      "P1": 500.0,
      "P2": 2.0,
      "gammas_db": [0.0, 5.0],
      "trials": 25,
      "seed": 9,
      "threads": 2,
      "hole_mode": "closest_hole_only",
      "tasks": ["cov_macro"],
      "output_dir": "somewhere",
      "dump_points": true
   })");
   const auto cfg = run::config_from_json(j);
   CHECK(cfg.params.lambda1 == doctest::Approx(2e-6));
   CHECK(cfg.params.lambda2 == doctest::Approx(3e-5));
   CHECK(cfg.params.D == 75.0);
   CHECK(cfg.params.alpha == 3.5);
   CHECK(cfg.trials == 25);
   CHECK(cfg.seed == 9);
   CHECK(cfg.threads == 2);
   CHECK(cfg.hole_mode == sim::HoleMode::ClosestHoleOnly);
   REQUIRE(cfg.tasks.size() == 1);
   CHECK(cfg.tasks[0] == run::Task::CovMacro);
   CHECK(cfg.output_dir == "somewhere");
   CHECK(cfg.dump_points);
}

TEST_CASE("json config rejects unknown keys and bad values")
{
   CHECK_THROWS_AS(run::config_from_json(nlohmann::json::parse(R"({"lambda1": 1.0})")),
                   ConfigError);
   CHECK_THROWS_AS(run::config_from_json(nlohmann::json::parse(R"({"trials": "many"})")),
                   ConfigError);
   CHECK_THROWS_AS(run::config_from_json(nlohmann::json::parse(R"({"hole_mode": "sometimes"})")),
                   ConfigError);
   CHECK_THROWS_AS(run::config_from_json(nlohmann::json::parse(R"([1,2])")), ConfigError);
   CHECK_THROWS_AS(run::config_from_json_file("/nonexistent_zz.json"), ConfigError);
}

TEST_CASE("run config validation")
{
   auto cfg = run::config_from_preset("setup1");
   run::validate(cfg);

   auto bad = cfg;
   bad.tasks.clear();
   CHECK_THROWS_AS(run::validate(bad), ConfigError);

   bad = cfg;
   bad.tasks.push_back(run::Task::CovMacro);
   bad.tasks.push_back(run::Task::CovMacro);
   CHECK_THROWS_AS(run::validate(bad), ConfigError);

   bad = cfg;
   bad.gammas_db = {3.0, 1.0};
   CHECK_THROWS_AS(run::validate(bad), ConfigError);

   bad = cfg;
   bad.trials = -1;
   CHECK_THROWS_AS(run::validate(bad), ConfigError);

   bad = cfg;
   bad.params.alpha = 2.0;
   CHECK_THROWS_AS(run::validate(bad), InvalidParams);
}

TEST_CASE("end-to-end run writes validated, reproducible artifacts")
{
   TempDir tmp("run");
   auto cfg       = run::config_from_preset("setup1");
   cfg.gammas_db  = {0.0, 10.0};
   cfg.trials     = 40;
   cfg.seed       = 123;
   cfg.output_dir = tmp.str();
   cfg.tasks      = {run::Task::DistZ2, run::Task::CovMacro};
   cfg.dump_points = true;

   const auto summary = run::run(cfg);
   run::validate_summary(summary);
   CHECK(summary.at("schema_version") == 1);
   CHECK(summary.at("tasks").contains("dist_z2"));
   CHECK(summary.at("tasks").contains("cov_macro"));
   CHECK(summary.at("tasks").at("cov_macro").at("curves").contains("T1_lower"));
   CHECK(fs::exists(tmp.path / "dist_z2.csv"));
   CHECK(fs::exists(tmp.path / "dist_z2_ecdf.csv"));
   CHECK(fs::exists(tmp.path / "cov_macro.csv"));
   CHECK(fs::exists(tmp.path / "points_phi1.csv"));
   CHECK(fs::exists(tmp.path / "points_phi2.csv"));
   CHECK(fs::exists(tmp.path / "summary.json"));

   const auto csv1 = slurp(tmp.str() + "/cov_macro.csv");
   const auto ecdf1 = slurp(tmp.str() + "/dist_z2_ecdf.csv");
   run::run(cfg);  // identical config: artifacts must be byte-identical
   CHECK(slurp(tmp.str() + "/cov_macro.csv") == csv1);
   CHECK(slurp(tmp.str() + "/dist_z2_ecdf.csv") == ecdf1);
}

TEST_CASE("summary schema violations are caught")
{
   auto cfg       = run::config_from_preset("setup1");
   TempDir tmp("sum");
   cfg.output_dir = tmp.str();
   cfg.gammas_db  = {0.0};
   cfg.trials     = 0;
   cfg.tasks      = {run::Task::DistZ2};
   auto summary   = run::run(cfg);

   auto broken = summary;
   broken.erase("counters");
   CHECK_THROWS_AS(run::validate_summary(broken), ConfigError);

   broken = summary;
   broken["tasks"]["dist_z2"].erase("wall_ms");
   CHECK_THROWS_AS(run::validate_summary(broken), ConfigError);

   broken = summary;
   broken["tasks"]["mystery"] = {{"wall_ms", 1.0}};
   CHECK_THROWS_AS(run::validate_summary(broken), ConfigError);
}

TEST_CASE("task labels round-trip")
{
   CHECK(run::task_label(run::Task::DistZ2) == "dist_z2");
   CHECK(run::task_label(run::Task::CovMacro) == "cov_macro");
   CHECK(run::task_label(run::Task::CovSmall) == "cov_small");
}
