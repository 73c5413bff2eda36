#include "doctest.h"

#include <cmath>
#include <cstring>

#include "hcncov/coverage_sim.hpp"
#include "hcncov/errors.hpp"
#include "hcncov/serving_distance.hpp"
#include "support/oracles.hpp"

using namespace hcncov;

namespace {

sim::SimConfig quick_cfg(NetworkParams p, long trials, std::uint64_t seed = 1)
{
   sim::SimConfig cfg;
   cfg.params = p;
   cfg.trials = trials;
   cfg.seed   = seed;
   return cfg;
}

bool records_equal(const sim::TrialRecord& a, const sim::TrialRecord& b)
{
   return std::memcmp(&a, &b, sizeof a) == 0;
}

} // namespace

TEST_CASE("two-point closed form through the fade-injection surface")
{
   NetworkParams p;
   p.lambda1 = 1e-6;
   p.lambda2 = 1e-6;
   p.D       = 0.0;
   p.alpha   = 4.0;
   p.P1      = 1000.0;
   p.P2      = 1.0;
   const std::vector<pp::Point> macros{{300.0, 0.0}};
   const std::vector<pp::Point> smalls{{0.0, 80.0}};
   const std::vector<double> h1{0.7}, h2{1.9};

   const auto rec = sim::sir_at_origin(macros, h1, smalls, h2, p);
   CHECK(rec.z1 == doctest::Approx(300.0));
   CHECK(rec.z2hat == doctest::Approx(80.0));
   const double c1 = p.P1 * 0.7 * std::pow(300.0, -4.0);
   const double c2 = p.P2 * 1.9 * std::pow(80.0, -4.0);
   CHECK(rec.sir_macro == doctest::Approx(c1 / c2).epsilon(1e-12));
   CHECK(rec.sir_small == doctest::Approx(c2 / c1).epsilon(1e-12));
}

TEST_CASE("fade-injection surface validates inputs")
{
   const auto p = setup1();
   const std::vector<pp::Point> one{{10.0, 0.0}};
   const std::vector<double> fades{1.0};
   CHECK_THROWS_AS(sim::sir_at_origin({}, {}, one, fades, p), EmptySet);
   CHECK_THROWS_AS(sim::sir_at_origin(one, fades, {}, {}, p), EmptySet);
   CHECK_THROWS_AS(sim::sir_at_origin(one, {}, one, fades, p), InvalidParams);
}

TEST_CASE("trials are bit-identical on replay")
{
   const auto cfg = quick_cfg(setup1(), 0);
   for(long id : {0L, 7L, 123L}) {
      const auto a = sim::run_trial(cfg, id);
      const auto b = sim::run_trial(cfg, id);
      CHECK(records_equal(a, b));
   }
}

TEST_CASE("thread count does not change the batch")
{
   auto cfg    = quick_cfg(setup1(), 64, 99);
   cfg.threads = 1;
   const auto a = sim::run_trials(cfg);
   cfg.threads = 8;
   const auto b = sim::run_trials(cfg);
   REQUIRE(a.size() == b.size());
   for(std::size_t i = 0; i < a.size(); ++i) CHECK(records_equal(a[i], b[i]));
}

TEST_CASE("hole modes share realizations where patterns agree")
{
   // With D = 0 nothing is carved, so the two modes must coincide exactly.
   auto p = setup1();
   p.D    = 0.0;
   auto cfg      = quick_cfg(p, 0, 5);
   cfg.hole_mode = sim::HoleMode::AllHoles;
   const auto a  = sim::run_trial(cfg, 11);
   cfg.hole_mode = sim::HoleMode::ClosestHoleOnly;
   const auto b  = sim::run_trial(cfg, 11);
   CHECK(records_equal(a, b));
}

TEST_CASE("near-certain coverage at a tiny threshold")
{
   auto p    = setup1();
   p.lambda2 = 1e-3;  // dense small tier
   auto cfg  = quick_cfg(p, 300, 3);
   cfg.window_radius = 600.0;  // keep the dense tier cheap
   const auto recs   = sim::run_trials(cfg);
   const auto est    = sim::coverage_estimate(recs, sim::Tier::Small, 1e-6);
   CHECK(est.value > 0.99);
}

TEST_CASE("coverage curve is non-increasing with CI filled in")
{
   const auto recs = sim::run_trials(quick_cfg(setup1(), 400, 21));
   std::vector<double> grid{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
   const auto c = sim::coverage_curve(recs, sim::Tier::Macro, grid);
   REQUIRE(c.values.size() == grid.size());
   REQUIRE(c.ci_halfwidth.size() == grid.size());
   for(std::size_t i = 0; i + 1 < c.values.size(); ++i) CHECK(c.values[i] >= c.values[i + 1]);
   for(double hw : c.ci_halfwidth) {
      CHECK(hw > 0.0);
      CHECK(hw < 0.06);
   }
   CHECK(c.method == CurveMethod::MonteCarlo);
}

TEST_CASE("estimate matches the D = 0 closed form within 3 CI")
{
   auto p = setup1();
   p.D    = 0.0;
   const auto recs = sim::run_trials(quick_cfg(p, 4000, 17));
   for(double gamma : {0.2, 1.0, 5.0}) {
      const auto macro = sim::coverage_estimate(recs, sim::Tier::Macro, gamma);
      const auto small = sim::coverage_estimate(recs, sim::Tier::Small, gamma);
      CHECK(std::abs(macro.value - oracle::coverage_d0_alpha4(true, gamma, p))
            < 3.0 * macro.ci_halfwidth);
      CHECK(std::abs(small.value - oracle::coverage_d0_alpha4(false, gamma, p))
            < 3.0 * small.ci_halfwidth);
   }
}

TEST_CASE("macro serving distance follows the Rayleigh law")
{
   const auto recs = sim::run_trials(quick_cfg(setup1(), 4000, 29));
   std::vector<double> z1(recs.size());
   for(std::size_t i = 0; i < recs.size(); ++i) z1[i] = recs[i].z1;
   const double lam1 = setup1().lambda1;
   const double ks   = oracle::ks_distance(
       z1, [&](double z) { return 1.0 - std::exp(-M_PI * lam1 * z * z); });
   CHECK(ks < 0.026);  // DKW 99% band at n = 4000
}

TEST_CASE("all-holes serving distance stochastically dominates the one-hole law")
{
   // P(Z2 > z) >= P(Z2hat > z): the empirical all-holes CDF must not exceed
   // the one-hole analytic CDF beyond binomial noise.
   const auto p    = setup1();
   const auto recs = sim::run_trials(quick_cfg(p, 3000, 31));
   const auto ecdf = sim::empirical_distance_cdf(recs, sim::Tier::Small, 128);
   const double slack = 3.0 * std::sqrt(std::log(2.0 / 0.01) / (2.0 * 3000.0));
   for(std::size_t i = 0; i < ecdf.r.size(); ++i) {
      const double analytic = dist::marginal_cdf_z2hat(ecdf.r[i], p);
      CHECK(ecdf.cdf[i] <= analytic + slack);
   }
}

TEST_CASE("empirical distance grid reaches the requested percentile")
{
   const auto recs = sim::run_trials(quick_cfg(setup1(), 1000, 37));
   const auto ecdf = sim::empirical_distance_cdf(recs, sim::Tier::Macro, 64);
   REQUIRE(ecdf.r.size() == 64);
   CHECK(ecdf.cdf.back() >= 0.998);
   for(std::size_t i = 0; i + 1 < ecdf.cdf.size(); ++i) CHECK(ecdf.cdf[i] <= ecdf.cdf[i + 1]);
}

TEST_CASE("window extension stays within statistical noise")
{
   auto cfg = quick_cfg(setup1(), 2000, 41);
   const auto base = sim::run_trials(cfg);
   cfg.window_radius = 2.0 * sim::default_window_radius(cfg.params);
   const auto wide   = sim::run_trials(cfg);
   for(double gamma : {0.5, 2.0}) {
      const auto a = sim::coverage_estimate(base, sim::Tier::Macro, gamma);
      const auto b = sim::coverage_estimate(wide, sim::Tier::Macro, gamma);
      CHECK(std::abs(a.value - b.value) <= a.ci_halfwidth + b.ci_halfwidth);
   }
}

TEST_CASE("estimator edge cases")
{
   std::vector<sim::TrialRecord> recs(100);
   for(auto& r : recs) {
      r.sir_macro = 10.0;
      r.sir_small = 0.1;
   }
   const auto hi = sim::coverage_estimate(recs, sim::Tier::Macro, 1.0);
   CHECK(hi.value == 1.0);
   CHECK(hi.ci_halfwidth > 0.0);  // Wilson fallback keeps a nonzero width
   const auto lo = sim::coverage_estimate(recs, sim::Tier::Small, 1.0);
   CHECK(lo.value == 0.0);
   CHECK(lo.ci_halfwidth > 0.0);
   CHECK_THROWS_AS(sim::coverage_estimate({}, sim::Tier::Macro, 1.0), EmptySet);
}

TEST_CASE("default window radius honors all three floors")
{
   auto p = setup1();
   CHECK(sim::default_window_radius(p) == doctest::Approx(5.0 / std::sqrt(M_PI * p.lambda1)));
   p.D = 500.0;
   CHECK(sim::default_window_radius(p) == doctest::Approx(5000.0));
   p.lambda1 = 1e-2;
   p.D       = 0.0;
   CHECK(sim::default_window_radius(p) == doctest::Approx(2000.0));
}
