#include "hcncov/network_params.hpp"

#include <cmath>

#include "hcncov/errors.hpp"

namespace hcncov {

void validate(const NetworkParams& p)
{
   const bool ok = std::isfinite(p.lambda1) && p.lambda1 > 0.0    //
                   && std::isfinite(p.lambda2) && p.lambda2 > 0.0 //
                   && std::isfinite(p.D) && p.D >= 0.0            //
                   && std::isfinite(p.alpha) && p.alpha > 2.0     //
                   && std::isfinite(p.P1) && p.P1 > 0.0           //
                   && std::isfinite(p.P2) && p.P2 > 0.0;
   if(!ok)
      throw InvalidParams("NetworkParams: need lambda1 > 0, lambda2 > 0, D >= 0, "
                          "alpha > 2, P1 > 0, P2 > 0, all finite");
}

NetworkParams setup1()
{
   return {1e-6, 50e-6, 50.0, 4.0, 1000.0, 1.0};
}

NetworkParams setup2()
{
   return {1e-6, 25e-6, 200.0, 4.0, 100.0, 1.0};
}

} // namespace hcncov
