#pragma once

#include <string_view>
#include <vector>

namespace hcncov {

// Identifies how a coverage curve was produced. The labels are part of the
// CSV schema: T1_lower / T2_upper bound the macro-tier coverage from below /
// above, T3_approx / T4_approx approximate the small-cell-tier coverage
// (nearest hole only vs all holes), MC is the simulation estimate.
enum class CurveMethod { MacroLower, MacroUpper, SmallClosestHole, SmallAllHoles, MonteCarlo };

std::string_view method_label(CurveMethod m);

struct CoverageCurve {
   std::vector<double> gammas_db;
   std::vector<double> values;
   CurveMethod method = CurveMethod::MonteCarlo;
   std::vector<double> ci_halfwidth;  // empty for analytic curves
};

struct DistanceCdf {
   std::vector<double> r;    // m
   std::vector<double> cdf;
};

double db_to_linear(double db);
double linear_to_db(double x);

// -10 dB .. 20 dB in 1 dB steps.
std::vector<double> default_gamma_grid_db();

} // namespace hcncov
