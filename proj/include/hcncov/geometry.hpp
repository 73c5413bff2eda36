#pragma once

// Circle-circle intersection ("lens") areas and derivatives. These are the
// geometric kernels behind the conditional serving-distance law: the circle
// centered at the origin is the candidate serving disc, the offset circle is
// an exclusion hole of radius r_hole whose center sits at distance d.

namespace hcncov::geom {

struct LensQuery {
   double r;       // centered circle radius, m (>= 0)
   double r_hole;  // hole radius, m (>= 0)
   double d;       // center separation, m (>= 0)
};

// 4x the area of the triangle with side lengths a, b, c, written in the
// difference-of-squares (Heron) form sqrt((a^2-(c-b)^2)((b+c)^2-a^2)).
// Throws NegativeRadicand when the lengths violate the triangle inequality
// beyond the boundary tolerance.
double tri_area4(double a, double b, double c);

// Area of the circular sector of the circle with radius r subtended by its
// intersection chord with a circle of radius r_other at center distance d:
// r^2 * arccos((r^2 - r_other^2 + d^2) / (2 r d)).
// The arccos argument is clamped to [-1, 1] when within 1e-9 of the bounds;
// beyond that throws ArgumentOutOfRange.
double lens_sector_area(double r, double r_other, double d);

// Intersection area of the two circles of a LensQuery. Total over all
// regimes: 0 when disjoint (d >= r + r_hole), pi*min(r, r_hole)^2 under
// containment (d <= |r - r_hole|), and the two-sector-minus-triangle
// composition in partial overlap.
double lens_area(const LensQuery& q);
double lens_area(double r, double r_hole, double d);

// d(lens_area)/dr at fixed r_hole and d: the arc length of the centered
// circle lying inside the hole, 2 r arccos((r^2 + d^2 - r_hole^2)/(2 r d)).
// Only defined in the partial-overlap regime |d - r_hole| < r < d + r_hole;
// throws OutsideOverlapRegime elsewhere.
double lens_area_dr(const LensQuery& q);
double lens_area_dr(double r, double r_hole, double d);

} // namespace hcncov::geom
