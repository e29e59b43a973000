#include "heavytail/polar.hpp"

#include <cmath>

#include "heavytail/error.hpp"

namespace heavytail {

PolarPair polar_transform(const Eigen::VectorXd& x, Norm norm) {
  if (x.size() == 0) fail(Error::Code::InvalidSpec, "polar_transform: empty vector");
  if (!x.allFinite()) fail(Error::Code::NonFinite, "polar_transform: non-finite component");
  const double r = norm_of(x, norm);
  if (r == 0.0) fail(Error::Code::ZeroVector, "polar_transform is undefined at 0");
  return PolarPair{r, x / r, norm};
}

Eigen::VectorXd polar_inverse(const PolarPair& p) {
  if (!(p.radius > 0.0) || !std::isfinite(p.radius)) {
    fail(Error::Code::InvalidSpec, "polar pair radius must be positive and finite");
  }
  if (std::fabs(norm_of(p.direction, p.norm) - 1.0) > 1e-12) {
    fail(Error::Code::InvalidSpec, "polar pair direction is not unit-norm");
  }
  return p.radius * p.direction;
}

}  // namespace heavytail
