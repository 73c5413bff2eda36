#include "hcncov/serving_distance.hpp"

#include <algorithm>
#include <cmath>

#include "hcncov/errors.hpp"
#include "hcncov/geometry.hpp"
#include "hcncov/quadrature.hpp"
#include "hcncov/rng.hpp"

namespace hcncov::dist {

namespace {

void check(const ConditionalDistanceDist& d)
{
   validate(d.params);
   if(!(d.z1 > 0.0) || !std::isfinite(d.z1))
      throw InvalidParams("ConditionalDistanceDist: z1 must be positive and finite");
}

} // namespace

double pdf_z1(double z1, double lambda1)
{
   if(!(lambda1 > 0.0)) throw InvalidParams("pdf_z1: lambda1 must be > 0");
   if(z1 <= 0.0) return 0.0;
   return 2.0 * M_PI * lambda1 * z1 * std::exp(-M_PI * lambda1 * z1 * z1);
}

double survival_z2hat(double z2hat, const ConditionalDistanceDist& dist)
{
   check(dist);
   if(z2hat <= 0.0) return 1.0;
   const auto& p      = dist.params;
   const double a_ins = geom::lens_area(z2hat, p.D, dist.z1);
   return std::exp(-p.lambda2 * (M_PI * z2hat * z2hat - a_ins));
}

double pdf_z2hat(double z2hat, const ConditionalDistanceDist& dist)
{
   check(dist);
   if(z2hat <= 0.0) return 0.0;
   const auto& p   = dist.params;
   const double lo = std::abs(dist.z1 - p.D);
   const double hi = dist.z1 + p.D;

   if(z2hat <= lo) {
      if(dist.z1 <= p.D) return 0.0;  // serving disc still inside the hole
      return 2.0 * M_PI * p.lambda2 * z2hat * std::exp(-M_PI * p.lambda2 * z2hat * z2hat);
   }
   if(z2hat >= hi) {
      // Hole fully inside the serving disc: plain law on the complement area.
      return 2.0 * M_PI * p.lambda2 * z2hat
             * std::exp(-M_PI * p.lambda2 * (z2hat * z2hat - p.D * p.D));
   }
   const double a_ins = geom::lens_area(z2hat, p.D, dist.z1);
   const double da    = geom::lens_area_dr(z2hat, p.D, dist.z1);
   return p.lambda2 * (2.0 * M_PI * z2hat - da)
          * std::exp(-p.lambda2 * (M_PI * z2hat * z2hat - a_ins));
}

double z1_truncation_radius(double lambda1)
{
   if(!(lambda1 > 0.0)) throw InvalidParams("z1_truncation_radius: lambda1 must be > 0");
   return std::sqrt(std::log(1e16) / (M_PI * lambda1));
}

double marginal_pdf_z2hat(double z2hat, const NetworkParams& p)
{
   validate(p);
   if(z2hat <= 0.0) return 0.0;
   const double z1_max = z1_truncation_radius(p.lambda1);
   const double z1_lo  = z2hat < p.D ? p.D - z2hat : 0.0;  // density vanishes below
   if(z1_lo >= z1_max) return 0.0;
   const auto pts = quad::breakpoints(z1_lo, z1_max,
                                      {std::abs(z2hat - p.D), p.D, z2hat + p.D});
   auto f = [&](double z1) {
      return pdf_z2hat(z2hat, {p, z1}) * pdf_z1(z1, p.lambda1);
   };
   return quad::integrate_segments(f, pts).value;
}

double marginal_cdf_z2hat(double z2hat, const NetworkParams& p)
{
   validate(p);
   if(z2hat <= 0.0) return 0.0;
   const double z1_hi = std::max(z1_truncation_radius(p.lambda1), z2hat + p.D);
   const auto pts     = quad::breakpoints(0.0, z1_hi,
                                          {std::abs(z2hat - p.D), p.D, z2hat + p.D});
   auto f = [&](double z1) {
      return survival_z2hat(z2hat, {p, z1}) * pdf_z1(z1, p.lambda1);
   };
   double surv = quad::integrate_segments(f, pts).value;
   // Beyond z1_hi the hole is disjoint from b(0, z2hat), so the conditional
   // survival is the constant exp(-lambda2 pi z^2); add that exact remainder.
   surv += std::exp(-p.lambda2 * M_PI * z2hat * z2hat)
           * std::exp(-M_PI * p.lambda1 * z1_hi * z1_hi);
   return 1.0 - surv;
}

double sample_z2hat(const ConditionalDistanceDist& dist, std::mt19937_64& eng)
{
   check(dist);
   const auto& p   = dist.params;
   const double lo = dist.z1 <= p.D ? p.D - dist.z1 : 0.0;
   const double u  = 1.0 - uniform01(eng);  // in (0, 1]
   if(u >= 1.0) return lo;

   double step = std::max({1.0 / std::sqrt(M_PI * p.lambda2), p.D * 0.25, 1e-3});
   double a = lo, b = lo + step;
   int expansions = 0;
   while(survival_z2hat(b, dist) > u) {
      a = b;
      step *= 2.0;
      b = lo + step;
      if(++expansions > 200) throw RootNotBracketed("sample_z2hat: bracket expansion failed");
   }
   for(int i = 0; i < 200 && b - a > 1e-12 * std::max(1.0, b); ++i) {
      const double mid = 0.5 * (a + b);
      if(survival_z2hat(mid, dist) > u)
         a = mid;
      else
         b = mid;
   }
   return 0.5 * (a + b);
}

} // namespace hcncov::dist
