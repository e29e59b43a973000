#pragma once

namespace heavytail {

// Standard normal CDF and survival function, erfc-based so both tails keep
// full relative accuracy (1 - Phi(x) stays exact down to ~1e-300).
double normal_cdf(double x);
double normal_sf(double x);

// Solves 1 - Phi(b) = p for p in (0, 1) by bisection to machine width.
double normal_upper_quantile(double p);

}  // namespace heavytail
