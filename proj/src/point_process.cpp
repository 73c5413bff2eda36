#include "hcncov/point_process.hpp"

#include <cmath>
#include <limits>

#include "hcncov/errors.hpp"

namespace hcncov::pp {

PointSet sample_ppp(double density_per_m2, double window_radius_m, RngStream stream)
{
   auto eng = make_engine(stream);
   return sample_ppp(density_per_m2, window_radius_m, eng);
}

PointSet sample_ppp(double density_per_m2, double window_radius_m, std::mt19937_64& eng)
{
   if(density_per_m2 < 0.0) throw InvalidDensity("sample_ppp: negative density");
   if(!(window_radius_m > 0.0)) throw ArgumentOutOfRange("sample_ppp: window radius must be > 0");

   const double mean = density_per_m2 * M_PI * window_radius_m * window_radius_m;
   if(mean > 5e7) throw Error("sample_ppp: expected count above 5e7, refusing");

   PointSet out;
   out.window_radius = window_radius_m;
   if(mean == 0.0) return out;

   const auto n = std::poisson_distribution<long long>{mean}(eng);
   out.points.reserve(static_cast<std::size_t>(n));
   for(long long i = 0; i < n; ++i) {
      const double r     = window_radius_m * std::sqrt(uniform01(eng));
      const double theta = 2.0 * M_PI * uniform01(eng);
      out.points.push_back({r * std::cos(theta), r * std::sin(theta)});
   }
   return out;
}

PointSet carve_php(const PointSet& baseline, const std::vector<Point>& hole_centers,
                   double hole_radius_m)
{
   if(hole_radius_m < 0.0) throw ArgumentOutOfRange("carve_php: negative hole radius");
   PointSet out;
   out.window_radius = baseline.window_radius;
   const double r2   = hole_radius_m * hole_radius_m;
   out.points.reserve(baseline.points.size());
   for(const auto& p : baseline.points) {
      bool keep = true;
      for(const auto& h : hole_centers) {
         const double dx = p.x - h.x;
         const double dy = p.y - h.y;
         if(dx * dx + dy * dy < r2) {
            keep = false;
            break;
         }
      }
      if(keep) out.points.push_back(p);
   }
   return out;
}

double nearest_distance(const Point& from, const PointSet& set)
{
   if(set.points.empty()) throw EmptySet("nearest_distance: empty point set");
   double best = std::numeric_limits<double>::infinity();
   for(const auto& p : set.points) {
      const double dx = p.x - from.x;
      const double dy = p.y - from.y;
      const double d2 = dx * dx + dy * dy;
      if(d2 < best) best = d2;
   }
   return std::sqrt(best);
}

} // namespace hcncov::pp
