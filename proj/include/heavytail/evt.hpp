#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "heavytail/measures.hpp"
#include "heavytail/tails.hpp"

namespace heavytail {

// Extended-regular-variation limit family k*(x^rho - 1)/rho (k*log x at
// rho = 0), its inverse, normalizing constants from a tail model, marginal
// standardization and max-stable limit CDFs.

struct PsiParams {
  PsiParams(double rho_, double k_ = 1.0);

  double rho;
  double k;  // nonzero
};

double psi(double x, const PsiParams& p);

// Inverse with k = 1: (1 + rho*y)^(1/rho), e^y at rho = 0; requires
// 1 + rho*y > 0. General k is recovered by rescaling y before the call.
double psi_inverse(double y, double rho);

// (a(t), b(t)) with b(t) = (1/(1-F))^{<-}(t) and a(t) = b(t e) - b(t).
struct ScaleLocation {
  double scale;     // a(t)
  double location;  // b(t)
};

ScaleLocation norming_from_tail(const TailSpec& tail, double t);

// The same pair as callables, for composition over threshold grids.
struct NormingPair {
  std::function<double(double)> scale;
  std::function<double(double)> location;
};

NormingPair norming_functions(const TailSpec& tail);

// Componentwise application of nondecreasing maps; ranks are preserved.
// Throws NonMonotoneTransform if a map decreases on observed points.
Eigen::MatrixXd marginal_standardize(const Eigen::MatrixXd& sample,
                                     const std::vector<std::function<double(double)>>& transforms);

// Max-stable CDF exp{-nu_*({y : y_i <= psi_i^{<-}(x_i)}^c)}. The overload
// without transforms takes x already on the standard scale (x > 0).
double max_stable_cdf(const LimitMeasureSpec& m, const Eigen::VectorXd& x);
double max_stable_cdf(const LimitMeasureSpec& m, const std::vector<PsiParams>& psis,
                      const Eigen::VectorXd& x);

// Componentwise maxima over consecutive blocks; a trailing partial block is
// dropped.
Eigen::MatrixXd block_maxima(const Eigen::MatrixXd& sample, Eigen::Index block);

}  // namespace heavytail
