#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcncov/coverage_analytic.hpp"
#include "hcncov/coverage_sim.hpp"
#include "hcncov/curves.hpp"
#include "hcncov/errors.hpp"
#include "hcncov/network_params.hpp"
#include "hcncov/rng.hpp"
#include "hcncov/runner.hpp"
#include "hcncov/serving_distance.hpp"

namespace py = pybind11;
using namespace hcncov;

namespace {

sim::Tier parse_tier(const std::string& s)
{
   if(s == "macro") return sim::Tier::Macro;
   if(s == "small") return sim::Tier::Small;
   throw py::value_error("tier must be 'macro' or 'small'");
}

sim::HoleMode parse_hole_mode(const std::string& s)
{
   if(s == "all_holes") return sim::HoleMode::AllHoles;
   if(s == "closest_hole_only") return sim::HoleMode::ClosestHoleOnly;
   throw py::value_error("hole_mode must be 'all_holes' or 'closest_hole_only'");
}

sim::SimConfig make_sim_config(const NetworkParams& p, long trials, std::uint64_t seed,
                               const std::string& hole_mode, double window_radius,
                               unsigned threads)
{
   sim::SimConfig cfg;
   cfg.params        = p;
   cfg.trials        = trials;
   cfg.seed          = seed;
   cfg.hole_mode     = parse_hole_mode(hole_mode);
   cfg.window_radius = window_radius;
   cfg.threads       = threads;
   return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
   m.doc() = "Two-tier downlink coverage with exclusion-zone small cells: "
             "serving-distance laws, analytic SIR coverage bounds and "
             "approximations, and a Monte Carlo cross-check.";

   py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
   py::register_exception<InvalidParams>(m, "InvalidParamsError", PyExc_ValueError);
   py::register_exception<IoError>(m, "IoError", PyExc_OSError);

   py::class_<NetworkParams>(m, "NetworkParams")
       .def(py::init<>())
       .def(py::init([](double lambda1, double lambda2, double D, double alpha, double P1,
                        double P2) {
               NetworkParams p{lambda1, lambda2, D, alpha, P1, P2};
               validate(p);
               return p;
            }),
            py::arg("lambda1"), py::arg("lambda2"), py::arg("D"), py::arg("alpha") = 4.0,
            py::arg("P1") = 1.0, py::arg("P2") = 1.0)
       .def_readwrite("lambda1", &NetworkParams::lambda1)
       .def_readwrite("lambda2", &NetworkParams::lambda2)
       .def_readwrite("D", &NetworkParams::D)
       .def_readwrite("alpha", &NetworkParams::alpha)
       .def_readwrite("P1", &NetworkParams::P1)
       .def_readwrite("P2", &NetworkParams::P2)
       .def("__repr__", [](const NetworkParams& p) {
          return "NetworkParams(lambda1=" + std::to_string(p.lambda1) +
                 ", lambda2=" + std::to_string(p.lambda2) + ", D=" + std::to_string(p.D) +
                 ", alpha=" + std::to_string(p.alpha) + ", P1=" + std::to_string(p.P1) +
                 ", P2=" + std::to_string(p.P2) + ")";
       });

   m.def("setup1", &setup1, "50x denser small tier, 30 dB macro power advantage, D = 50 m.");
   m.def("setup2", &setup2, "25x denser small tier, 20 dB macro power advantage, D = 200 m.");
   m.def("validate_params", [](const NetworkParams& p) { validate(p); });

   m.def("db_to_linear", &db_to_linear, py::arg("db"));
   m.def("linear_to_db", &linear_to_db, py::arg("x"));
   m.def("default_gamma_grid_db", &default_gamma_grid_db);

   py::class_<CoverageCurve>(m, "CoverageCurve")
       .def_readonly("gammas_db", &CoverageCurve::gammas_db)
       .def_readonly("values", &CoverageCurve::values)
       .def_readonly("ci_halfwidth", &CoverageCurve::ci_halfwidth)
       .def_property_readonly(
           "method", [](const CoverageCurve& c) { return std::string(method_label(c.method)); })
       .def("__len__", [](const CoverageCurve& c) { return c.values.size(); });

   // Serving-distance laws.
   m.def("pdf_z1", &dist::pdf_z1, py::arg("z1"), py::arg("lambda1"),
         "Nearest-macro distance density.");
   m.def(
       "conditional_pdf_z2hat",
       [](double z2hat, const NetworkParams& p, double z1) {
          return dist::pdf_z2hat(z2hat, {p, z1});
       },
       py::arg("z2hat"), py::arg("params"), py::arg("z1"),
       "Density of the nearest-small-cell distance given the nearest macro at z1.");
   m.def(
       "conditional_survival_z2hat",
       [](double z2hat, const NetworkParams& p, double z1) {
          return dist::survival_z2hat(z2hat, {p, z1});
       },
       py::arg("z2hat"), py::arg("params"), py::arg("z1"));
   m.def("marginal_pdf_z2hat", &dist::marginal_pdf_z2hat, py::arg("z2hat"), py::arg("params"));
   m.def("marginal_cdf_z2hat", &dist::marginal_cdf_z2hat, py::arg("z2hat"), py::arg("params"));
   m.def(
       "sample_z2hat",
       [](const NetworkParams& p, double z1, long n, std::uint64_t seed) {
          if(n < 0) throw py::value_error("n must be >= 0");
          auto eng = make_engine({seed, 0});
          std::vector<double> out(static_cast<std::size_t>(n));
          for(auto& v : out) v = dist::sample_z2hat({p, z1}, eng);
          return out;
       },
       py::arg("params"), py::arg("z1"), py::arg("n"), py::arg("seed") = 1,
       "Inverse-transform samples of the conditional law.");

   // Analytic coverage, thresholds in linear SIR.
   m.def(
       "macro_coverage_lower",
       [](double gamma, const NetworkParams& p) { return cov::macro_coverage_lower({gamma}, p); },
       py::arg("gamma"), py::arg("params"));
   m.def(
       "macro_coverage_upper",
       [](double gamma, const NetworkParams& p) { return cov::macro_coverage_upper({gamma}, p); },
       py::arg("gamma"), py::arg("params"));
   m.def(
       "small_coverage_closest_hole",
       [](double gamma, const NetworkParams& p) {
          return cov::small_coverage_closest_hole({gamma}, p);
       },
       py::arg("gamma"), py::arg("params"));
   m.def(
       "small_coverage_all_holes",
       [](double gamma, const NetworkParams& p) {
          return cov::small_coverage_all_holes({gamma}, p);
       },
       py::arg("gamma"), py::arg("params"));
   m.def(
       "macro_coverage_curves",
       [](const std::vector<double>& gammas_db, const NetworkParams& p, unsigned threads) {
          return cov::macro_coverage_curves(gammas_db, p, threads);
       },
       py::arg("gammas_db"), py::arg("params"), py::arg("threads") = 0,
       "Returns the (lower bound, upper bound) curve pair over a dB grid.");
   m.def(
       "small_coverage_curves",
       [](const std::vector<double>& gammas_db, const NetworkParams& p, unsigned threads) {
          return cov::small_coverage_curves(gammas_db, p, threads);
       },
       py::arg("gammas_db"), py::arg("params"), py::arg("threads") = 0,
       "Returns the (closest-hole, all-holes) approximation pair over a dB grid.");

   // Monte Carlo.
   m.def(
       "simulate_coverage",
       [](const std::string& tier, const std::vector<double>& gammas_db, const NetworkParams& p,
          long trials, std::uint64_t seed, const std::string& hole_mode, double window_radius,
          unsigned threads) {
          const auto cfg = make_sim_config(p, trials, seed, hole_mode, window_radius, threads);
          return sim::estimate_coverage(parse_tier(tier), gammas_db, cfg);
       },
       py::arg("tier"), py::arg("gammas_db"), py::arg("params"), py::arg("trials") = 10000,
       py::arg("seed") = 1, py::arg("hole_mode") = "all_holes",
       py::arg("window_radius") = 0.0, py::arg("threads") = 1,
       "Coverage curve with 95% CI halfwidths from independent trials.");
   m.def(
       "simulate_distances",
       [](const NetworkParams& p, long trials, std::uint64_t seed,
          const std::string& hole_mode, double window_radius, unsigned threads) {
          const auto cfg = make_sim_config(p, trials, seed, hole_mode, window_radius, threads);
          const auto recs = sim::run_trials(cfg);
          std::vector<double> z1(recs.size()), z2(recs.size());
          for(std::size_t i = 0; i < recs.size(); ++i) {
             z1[i] = recs[i].z1;
             z2[i] = recs[i].z2hat;
          }
          return std::make_pair(std::move(z1), std::move(z2));
       },
       py::arg("params"), py::arg("trials") = 10000, py::arg("seed") = 1,
       py::arg("hole_mode") = "all_holes", py::arg("window_radius") = 0.0,
       py::arg("threads") = 1,
       "Per-trial (nearest macro, nearest small cell) distance pairs.");

   // End-to-end runs; returns the summary document as a dict-like JSON string.
   m.def(
       "run_preset",
       [](const std::string& name, const std::string& output_dir, long trials,
          std::uint64_t seed, unsigned threads) {
          auto cfg       = run::config_from_preset(name);
          cfg.output_dir = output_dir;
          cfg.trials     = trials;
          cfg.seed       = seed;
          cfg.threads    = threads;
          run::validate(cfg);
          return run::run(cfg).dump();
       },
       py::arg("name"), py::arg("output_dir"), py::arg("trials") = 10000, py::arg("seed") = 1,
       py::arg("threads") = 1,
       "Runs a built-in configuration and returns the summary as a JSON string.");
   m.def(
       "run_config_file",
       [](const std::string& path) {
          auto cfg = run::config_from_json_file(path);
          run::validate(cfg);
          return run::run(cfg).dump();
       },
       py::arg("path"), "Runs a JSON run configuration and returns the summary JSON string.");
}
