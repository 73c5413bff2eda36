#pragma once

#include <stdexcept>
#include <string>

namespace hcncov {

// Base class for all library errors.
struct Error : std::runtime_error {
   using std::runtime_error::runtime_error;
};

// -- geometry ---------------------------------------------------------------

// Heron-form radicand went negative: the three lengths do not describe a
// partial circle overlap.
struct NegativeRadicand : Error {
   using Error::Error;
};

// An argument left its mathematical domain by more than the boundary
// tolerance (e.g. an arccos argument beyond [-1, 1]).
struct ArgumentOutOfRange : Error {
   using Error::Error;
};

// Arc-length derivative requested outside the partial-overlap regime.
struct OutsideOverlapRegime : Error {
   using Error::Error;
};

// -- point process ----------------------------------------------------------

struct InvalidDensity : Error {
   using Error::Error;
};

struct EmptySet : Error {
   using Error::Error;
};

// A simulation tier came up with no point inside the window.
struct EmptyTier : Error {
   using Error::Error;
};

// -- quadrature -------------------------------------------------------------

struct MaxSubdivisionsExceeded : Error {
   MaxSubdivisionsExceeded(const std::string& what, double partial, double estimate)
       : Error(what), partial_value(partial), error_estimate(estimate)
   {}
   double partial_value;   // best value accumulated so far
   double error_estimate;  // its error estimate
};

// Tail probes of a semi-infinite integrand failed to decrease.
struct NonDecayingIntegrand : Error {
   using Error::Error;
};

// -- parameters, sampling, I/O ----------------------------------------------

struct InvalidParams : Error {
   using Error::Error;
};

// Evaluation requested outside an operation's stated domain.
struct DomainError : Error {
   using Error::Error;
};

// Inverse-transform bracket expansion failed (should not occur for valid
// survival functions).
struct RootNotBracketed : Error {
   using Error::Error;
};

struct ConfigError : Error {
   using Error::Error;
};

struct IoError : Error {
   using Error::Error;
};

} // namespace hcncov
