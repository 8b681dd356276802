#pragma once

#include <cstddef>

#include "types.hpp"

namespace msfdr {

// Multiple-stage step-down constants alpha_i = iq/(m + beta - i(1-q)).
// beta = 1 gives the standard schedule; larger beta is more conservative.
CriticalConstants ms_constants(std::size_t m, double q, double beta = 1.0);

// Linear step-up constants alpha_i = iq/m.
CriticalConstants bh_constants(std::size_t m, double q);

// Step-down constants with alpha_i/(1-alpha_i) = iq/(m-i+beta), beta = m(1-q),
// the largest choice with proven FDR control under positive dependence.
// Equivalently the ms family at beta = m(1-q); alpha_m = q exactly.
CriticalConstants prds_constants(std::size_t m, double q);

// The step-down FDR bound iq/(m+1-i) on alpha_i/(1-alpha_i), index i in 1..m.
double theorem1_bound(std::size_t i, std::size_t m, double q);

// True iff alpha_i/(1-alpha_i) <= iq/(m+1-i) for every i, with 1e-12 relative
// slack so schedules meeting the bound with equality pass.
bool check_theorem1_condition(const CriticalConstants& c, double q);

}  // namespace msfdr
