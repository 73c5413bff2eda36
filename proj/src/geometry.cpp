#include "hcncov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcncov/errors.hpp"

namespace hcncov::geom {

namespace {

// Boundary tolerance shared by all clamping decisions in this module.
constexpr double kBoundaryTol = 1e-9;

double clamped_acos_arg(double u, const char* who)
{
   if(u > 1.0) {
      if(u > 1.0 + kBoundaryTol)
         throw ArgumentOutOfRange(std::string(who) + ": arccos argument " + std::to_string(u)
                                  + " above 1 beyond tolerance");
      return 1.0;
   }
   if(u < -1.0) {
      if(u < -1.0 - kBoundaryTol)
         throw ArgumentOutOfRange(std::string(who) + ": arccos argument " + std::to_string(u)
                                  + " below -1 beyond tolerance");
      return -1.0;
   }
   return u;
}

} // namespace

double tri_area4(double a, double b, double c)
{
   const double scale = a + b + c;
   const double tol   = kBoundaryTol * scale * scale;
   double f1          = a * a - (c - b) * (c - b);
   double f2          = (b + c) * (b + c) - a * a;
   if(f1 < 0.0) {
      if(f1 < -tol) throw NegativeRadicand("tri_area4: a^2 - (c-b)^2 negative");
      f1 = 0.0;
   }
   if(f2 < 0.0) {
      if(f2 < -tol) throw NegativeRadicand("tri_area4: (b+c)^2 - a^2 negative");
      f2 = 0.0;
   }
   return std::sqrt(f1 * f2);
}

double lens_sector_area(double r, double r_other, double d)
{
   if(!(r > 0.0) || !(d > 0.0) || r_other < 0.0)
      throw ArgumentOutOfRange("lens_sector_area: need r > 0, d > 0, r_other >= 0");
   const double u = (r * r - r_other * r_other + d * d) / (2.0 * r * d);
   return r * r * std::acos(clamped_acos_arg(u, "lens_sector_area"));
}

double lens_area(const LensQuery& q)
{
   return lens_area(q.r, q.r_hole, q.d);
}

double lens_area(double r, double r_hole, double d)
{
   if(r < 0.0 || r_hole < 0.0 || d < 0.0)
      throw ArgumentOutOfRange("lens_area: radii and separation must be nonnegative");
   const double rmin = std::min(r, r_hole);
   if(rmin == 0.0) return 0.0;
   if(d >= r + r_hole) return 0.0;                  // disjoint (or externally tangent)
   if(d <= std::abs(r - r_hole)) return M_PI * rmin * rmin;  // containment
   return lens_sector_area(r_hole, r, d) + lens_sector_area(r, r_hole, d)
          - 0.5 * tri_area4(r_hole, r, d);
}

double lens_area_dr(const LensQuery& q)
{
   return lens_area_dr(q.r, q.r_hole, q.d);
}

double lens_area_dr(double r, double r_hole, double d)
{
   if(!(std::abs(d - r_hole) < r && r < d + r_hole))
      throw OutsideOverlapRegime("lens_area_dr: query outside partial-overlap regime");
   const double u = (r * r + d * d - r_hole * r_hole) / (2.0 * r * d);
   return 2.0 * r * std::acos(clamped_acos_arg(u, "lens_area_dr"));
}

} // namespace hcncov::geom
