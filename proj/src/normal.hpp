#pragma once

namespace msfdr {

// Standard normal cdf Phi(x).
double normal_cdf(double x);

// Upper tail 1 - Phi(x), computed without cancellation for large x.
double normal_sf(double x);

// Quantile Phi^{-1}(p) for p in (0,1). Wichura's AS 241 rational
// approximations, accurate to full double precision.
double normal_quantile(double p);

}  // namespace msfdr
