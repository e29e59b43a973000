#include "heavytail/gaussian.hpp"

#include <cmath>

#include "heavytail/error.hpp"

namespace heavytail {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_sf(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

double normal_upper_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    fail(Error::Code::DomainViolation, "normal_upper_quantile requires p in (0, 1)");
  }
  double lo = -40.0, hi = 40.0;
  // normal_sf is strictly decreasing; bisect until the bracket collapses.
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::fabs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (normal_sf(mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace heavytail
