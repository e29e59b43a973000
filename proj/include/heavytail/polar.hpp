#pragma once

#include <Eigen/Core>

#include "heavytail/norms.hpp"

namespace heavytail {

// (r, a) = (||x||, x/||x||) under the owning norm; r > 0 and ||a|| = 1.
struct PolarPair {
  double radius;
  Eigen::VectorXd direction;
  Norm norm;
};

// Undefined at 0 and at vectors with non-finite components.
PolarPair polar_transform(const Eigen::VectorXd& x, Norm norm);

// r * a; inverts polar_transform exactly up to rounding.
Eigen::VectorXd polar_inverse(const PolarPair& p);

}  // namespace heavytail
