#pragma once

namespace hcncov {

// Two-tier downlink parameters. All lengths are meters and densities are per
// square meter; P1/P2 are transmit powers in arbitrary consistent linear
// units (only their ratio matters since noise is neglected). Macro sites of
// density lambda1 each carry an exclusion disc of radius D; the small-cell
// tier of density lambda2 lives outside the union of those discs.
struct NetworkParams {
   double lambda1 = 0.0;  // macro density, 1/m^2 (> 0)
   double lambda2 = 0.0;  // small-cell baseline density, 1/m^2 (> 0)
   double D       = 0.0;  // exclusion radius, m (>= 0)
   double alpha   = 4.0;  // path-loss exponent (> 2)
   double P1      = 1.0;  // macro power (> 0)
   double P2      = 1.0;  // small-cell power (> 0)
};

// Throws InvalidParams when any invariant fails.
void validate(const NetworkParams& p);

// Reference configurations used throughout the tests and docs:
// setup 1: lambda2 = 50*lambda1, P1 = 1000*P2, D = 50 m;
// setup 2: lambda2 = 25*lambda1, P1 = 100*P2,  D = 200 m;
// both with lambda1 = 1 per km^2 and alpha = 4.
NetworkParams setup1();
NetworkParams setup2();

} // namespace hcncov
