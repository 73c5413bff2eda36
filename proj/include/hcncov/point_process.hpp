#pragma once

#include <random>
#include <vector>

#include "hcncov/rng.hpp"

namespace hcncov::pp {

struct Point {
   double x = 0.0;
   double y = 0.0;
};

// A finite point pattern observed in a disc window centered at the origin.
struct PointSet {
   std::vector<Point> points;
   double window_radius = 0.0;  // m
};

// Homogeneous Poisson process in a disc window: Poisson count with mean
// density*pi*R^2, then i.i.d. uniform positions. Throws InvalidDensity for a
// negative density; density 0 gives an empty set.
PointSet sample_ppp(double density_per_m2, double window_radius_m, RngStream stream);

// Engine-based variant so a caller can interleave several sampling phases on
// one deterministic stream.
PointSet sample_ppp(double density_per_m2, double window_radius_m, std::mt19937_64& eng);

// Removes every point that lies strictly within distance hole_radius of any
// hole center. Points exactly at distance hole_radius survive; hole_radius 0
// returns the baseline unchanged.
PointSet carve_php(const PointSet& baseline, const std::vector<Point>& hole_centers,
                   double hole_radius_m);

// Distance from `from` to the nearest point of the set (exhaustive scan).
// Throws EmptySet when there is no point.
double nearest_distance(const Point& from, const PointSet& set);

} // namespace hcncov::pp
