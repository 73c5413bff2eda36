#include "doctest.h"

#include <cmath>

#include "hcncov/errors.hpp"
#include "hcncov/geometry.hpp"
#include "support/oracles.hpp"

using namespace hcncov;

TEST_CASE("tri_area4 equilateral unit triangle")
{
   // 4 * area of the (1,1,1) triangle = 4 * sqrt(3)/4.
   CHECK(geom::tri_area4(1.0, 1.0, 1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("tri_area4 degenerate and invalid")
{
   CHECK(geom::tri_area4(2.0, 1.0, 1.0) == doctest::Approx(0.0));
   CHECK_THROWS_AS(geom::tri_area4(3.0, 1.0, 1.0), NegativeRadicand);
}

TEST_CASE("lens_sector_area unit symmetric case")
{
   CHECK(geom::lens_sector_area(1.0, 1.0, 1.0) == doctest::Approx(M_PI / 3.0).epsilon(1e-12));
}

TEST_CASE("lens_area equal unit circles at distance 1")
{
   // 2 (pi/3) - sqrt(3)/2: classical two-circle lens.
   const double expect = 2.0 * M_PI / 3.0 - std::sqrt(3.0) / 2.0;
   CHECK(geom::lens_area(1.0, 1.0, 1.0) == doctest::Approx(expect).epsilon(1e-12));
   CHECK(geom::lens_area({1.0, 1.0, 1.0}) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("lens_area regime boundaries")
{
   CHECK(geom::lens_area(1.0, 1.0, 2.0) == 0.0);      // tangent, disjoint side
   CHECK(geom::lens_area(1.0, 1.0, 5.0) == 0.0);      // disjoint
   CHECK(geom::lens_area(1.0, 3.0, 1.5) == doctest::Approx(M_PI));   // contained
   CHECK(geom::lens_area(1.0, 3.0, 2.0) == doctest::Approx(M_PI));   // internally tangent
   CHECK(geom::lens_area(0.0, 1.0, 0.5) == 0.0);      // degenerate disc
   CHECK(geom::lens_area(2.0, 1.0, 0.0) == doctest::Approx(M_PI));   // concentric, hole smaller
}

TEST_CASE("lens_area rejects negative arguments")
{
   CHECK_THROWS_AS(geom::lens_area(-1.0, 1.0, 1.0), ArgumentOutOfRange);
   CHECK_THROWS_AS(geom::lens_area(1.0, -1.0, 1.0), ArgumentOutOfRange);
   CHECK_THROWS_AS(geom::lens_area(1.0, 1.0, -1.0), ArgumentOutOfRange);
}

TEST_CASE("lens_area symmetry in the two radii")
{
   CHECK(geom::lens_area(1.3, 0.7, 1.1)
         == doctest::Approx(geom::lens_area(0.7, 1.3, 1.1)).epsilon(1e-12));
}

TEST_CASE("lens_area monotone decreasing in separation")
{
   double prev = geom::lens_area(1.0, 0.8, 0.21);
   for(double d = 0.3; d < 1.9; d += 0.1) {
      const double cur = geom::lens_area(1.0, 0.8, d);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
   }
}

TEST_CASE("lens_area against dart-throwing oracle")
{
   // Cheap version of the acceptance sweep: 2e5 darts, tolerance 5e-3
   // normalized by the smaller disc area.
   auto eng = make_engine({20240817, 0});
   for(int it = 0; it < 8; ++it) {
      const double r  = 0.2 + 1.8 * uniform01(eng);
      const double rh = 0.2 + 1.8 * uniform01(eng);
      const double d  = 2.2 * uniform01(eng);
      const double mc = oracle::dart_lens_area(r, rh, d, 200000, 7 + it);
      const double an = geom::lens_area(r, rh, d);
      const double rmin = std::min(r, rh);
      CHECK(std::abs(an - mc) / (M_PI * rmin * rmin) < 5e-3);
   }
}

TEST_CASE("lens_area_dr matches finite differences")
{
   for(double r : {0.6, 0.9, 1.2}) {
      const double d = 1.0, rh = 0.8;  // overlap regime: |d-rh| = 0.2 < r < 1.8
      const double h  = 1e-6;
      const double fd = oracle::central_diff(
          [&](double x) { return geom::lens_area(x, rh, d); }, r, h);
      CHECK(geom::lens_area_dr(r, rh, d) == doctest::Approx(fd).epsilon(1e-6));
   }
}

TEST_CASE("lens_area_dr unit symmetric value")
{
   // d lens/dr at (1,1,1): 2 arccos(1/2) = 2 pi/3.
   CHECK(geom::lens_area_dr(1.0, 1.0, 1.0) == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-12));
}

TEST_CASE("lens_area_dr outside the partial-overlap regime")
{
   CHECK_THROWS_AS(geom::lens_area_dr(3.0, 1.0, 1.0), OutsideOverlapRegime);  // contains hole
   CHECK_THROWS_AS(geom::lens_area_dr(0.1, 1.0, 0.5), OutsideOverlapRegime);  // inside hole
   CHECK_THROWS_AS(geom::lens_area_dr(5.0, 1.0, 10.0), OutsideOverlapRegime); // disjoint
}

TEST_CASE("lens_area consistent with its derivative")
{
   // Integrate dr-derivative across the overlap window and compare against
   // the area difference.
   const double rh = 1.0, d = 1.4;
   const double a = 0.5, b = 2.3;  // inside (|d-rh|, d+rh) = (0.4, 2.4)
   double acc = 0.0;
   const int n = 20000;
   for(int i = 0; i < n; ++i) {
      const double r = a + (b - a) * (i + 0.5) / n;
      acc += geom::lens_area_dr(r, rh, d) * (b - a) / n;
   }
   CHECK(acc == doctest::Approx(geom::lens_area(b, rh, d) - geom::lens_area(a, rh, d))
                    .epsilon(1e-6));
}
