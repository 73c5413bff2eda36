#pragma once

#include <span>
#include <utility>

#include "hcncov/curves.hpp"
#include "hcncov/network_params.hpp"
#include "hcncov/quadrature.hpp"

// Analytic downlink SIR coverage for the typical user under Rayleigh fading
// (noise neglected). Macro-tier coverage is bracketed by a lower bound (only
// the exclusion disc of the serving macro is carved out of the interferer
// field) and an upper bound (every macro's disc is carved independently,
// ignoring overlap). Small-cell-tier coverage gets the analogous pair,
// treated as approximations since the serving-distance law used for the
// small tier conditions on the nearest hole only.

namespace hcncov::cov {

struct SirThreshold {
   double gamma = 1.0;  // linear SIR threshold, > 0
   static SirThreshold from_db(double db);
};

struct LaplaceArg {
   double s = 0.0;  // > 0
};

// Rayleigh-fading Laplace factor of one interferer at distance v with power
// P: 1/(1 + s P v^-alpha). Tends to 1 as s -> 0 and to 0 as v -> 0.
double zeta(LaplaceArg s, double v, double P, double alpha);

// Laplace factor of the full-plane small-cell field:
// exp(-pi lambda2 (s P2)^(2/alpha) / sinc(2/alpha)).
double g1_hat(LaplaceArg s, double lambda2, double P2, double alpha);

// Same field restricted to the outside of b(0, D - z1), the largest disc
// around a user at distance z1 < D from the hole center that is free of
// small cells. Requires 0 < z1 < D; throws DomainError otherwise.
double g1_inside(LaplaceArg s, double z1, const NetworkParams& p);

// Interference exponent removed by the exclusion disc around a macro at
// distance z1 (nonnegative):
//   f(s, z1) = int 2 lambda2 arccos((r^2+z1^2-D^2)/(2 z1 r)) r
//              / (1 + r^alpha/(P2 s)) dr over r in (|z1-D|, z1+D).
double f_removed(LaplaceArg s, double z1, const NetworkParams& p);

// f with the radial window clipped to r >= z2hat: interferers closer than
// the serving small cell are already excluded, so their removal must not be
// counted twice. Reduces to f_removed for z2hat <= |z1-D| and to 0 for
// z2hat >= z1+D.
double g_removed(LaplaceArg s, double z1, double z2hat, const NetworkParams& p);

// Coverage evaluators; results are clamped into [0, 1] (see
// clamp_warning_count).
double macro_coverage_lower(SirThreshold g, const NetworkParams& p);
double macro_coverage_upper(SirThreshold g, const NetworkParams& p);
double small_coverage_closest_hole(SirThreshold g, const NetworkParams& p);
double small_coverage_all_holes(SirThreshold g, const NetworkParams& p);

// Sweeps over a dB grid; grid points are evaluated in parallel (threads = 0
// picks the hardware count) and results are deterministic regardless of the
// thread count. The pair functions share work between the related curves:
// the upper/all-holes member is built as the lower/closest-hole member plus
// a nonnegative gap integral, which enforces the ordering invariants
// exactly.
std::pair<CoverageCurve, CoverageCurve> macro_coverage_curves(
    std::span<const double> gammas_db, const NetworkParams& p, unsigned threads = 0);
std::pair<CoverageCurve, CoverageCurve> small_coverage_curves(
    std::span<const double> gammas_db, const NetworkParams& p, unsigned threads = 0);

// Number of evaluator results that landed outside [0 - 1e-9, 1 + 1e-9] and
// were clamped (upper bounds may exceed 1 by construction; anything else is
// worth investigating).
long clamp_warning_count();

namespace detail {

// Memoizes v -> g_removed(s, v, z2hat) for fixed (s, z2hat): cubic spline on
// the partial-overlap window plus a rational-mapped spline for the tail.
// Built once per outer quadrature node; serves the ~10^4 lookups made by the
// inner tail integrals.
class HoleCorrectionTable {
 public:
   HoleCorrectionTable(LaplaceArg s, double z2hat, const NetworkParams& p);
   double operator()(double v) const;

 private:
   NetworkParams p_;
   LaplaceArg s_;
   double z2hat_   = 0.0;
   double onset_   = 0.0;  // |z2hat - D|
   double far_     = 0.0;  // z2hat + D
   double scale_   = 1.0;  // rational map scale for the tail spline
   bool trivial_   = false;
   bool has_window_ = false;
   quad::CubicSpline window_;  // on [onset, far]
   quad::CubicSpline tail_;    // on u in [0, 1], v = far + scale u/(1-u)
};

} // namespace detail

} // namespace hcncov::cov
