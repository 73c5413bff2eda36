#include "hcncov/curves.hpp"

#include <cmath>

namespace hcncov {

std::string_view method_label(CurveMethod m)
{
   switch(m) {
      case CurveMethod::MacroLower: return "T1_lower";
      case CurveMethod::MacroUpper: return "T2_upper";
      case CurveMethod::SmallClosestHole: return "T3_approx";
      case CurveMethod::SmallAllHoles: return "T4_approx";
      case CurveMethod::MonteCarlo: return "MC";
   }
   return "unknown";
}

double db_to_linear(double db)
{
   return std::pow(10.0, db / 10.0);
}

double linear_to_db(double x)
{
   return 10.0 * std::log10(x);
}

std::vector<double> default_gamma_grid_db()
{
   std::vector<double> g;
   for(int db = -10; db <= 20; ++db) g.push_back(static_cast<double>(db));
   return g;
}

} // namespace hcncov
