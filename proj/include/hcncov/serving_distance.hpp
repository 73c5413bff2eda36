#pragma once

#include <random>

#include "hcncov/network_params.hpp"

// Serving-distance laws for the typical user at the origin. Z1 is the
// distance to the nearest macro site; conditioned on Z1 = z1, the nearest
// small cell outside the exclusion disc b(x1, D) around that site sits at
// distance Z2hat with the survival function
//   P(Z2hat > z | Z1 = z1) = exp(-lambda2 (pi z^2 - A_ins(z, z1)))
// where A_ins is the area of b(0, z) covered by the hole.

namespace hcncov::dist {

// Nearest-macro distance density 2 pi lambda1 z1 exp(-pi lambda1 z1^2).
double pdf_z1(double z1, double lambda1);

// Conditional law of the nearest small cell given the nearest macro at z1.
struct ConditionalDistanceDist {
   NetworkParams params;
   double z1 = 0.0;  // m, > 0
};

double survival_z2hat(double z2hat, const ConditionalDistanceDist& dist);

// Density of the conditional law; 0 outside the support (in particular for
// z2hat <= D - z1 when the user sits inside the hole).
double pdf_z2hat(double z2hat, const ConditionalDistanceDist& dist);

// Z1-marginalized density and CDF of Z2hat.
double marginal_pdf_z2hat(double z2hat, const NetworkParams& p);
double marginal_cdf_z2hat(double z2hat, const NetworkParams& p);

// Inverse-transform sample of the conditional law.
double sample_z2hat(const ConditionalDistanceDist& dist, std::mt19937_64& eng);

// Radius beyond which pdf_z1 drops below 1e-16 of its scale; marginalization
// truncates there.
double z1_truncation_radius(double lambda1);

} // namespace hcncov::dist
