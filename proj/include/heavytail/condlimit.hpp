#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "heavytail/evt.hpp"

namespace heavytail {

// Conditioned limit laws on the half-open cone: Y-standardization via a
// nondecreasing map with computable inverse, location/scale fits above
// thresholds, psi ratio tables and the product-form test, with the
// bivariate-normal example as exact oracle.

struct MonotoneMap {
  std::function<double(double)> forward;  // b
  std::function<double(double)> inverse;  // b^{<-}
};

MonotoneMap identity_map();
MonotoneMap log_map();  // b = log, so Y* = e^Y

// b(t) = quantile of 1/(1-Phi) (computed by bisection to full precision);
// b^{<-}(y) = 1/(1-Phi(y)), making Y* exactly Pareto(1) for normal Y.
MonotoneMap gaussian_quantile_map();

// Y*_i = b^{<-}(y_i); ranks preserved. NonMonotoneTransform if the inverse
// decreases on observed points.
Eigen::VectorXd standardize_y(const Eigen::VectorXd& y, const MonotoneMap& b);

// Per-threshold conditional location/scale of X given Y* > t: location =
// conditional median, scale = conditional interquartile range.
struct CondLimitFit {
  Eigen::VectorXd thresholds;       // t_1 < ... < t_m (Y* levels)
  Eigen::VectorXd beta_hat;         // location per threshold
  Eigen::VectorXd alpha_scale_hat;  // scale per threshold (positive)
  // filled by later stages
  std::vector<double> c_grid;
  Eigen::VectorXd psi1;
  Eigen::VectorXd psi2;
  bool product_verdict = false;
};

// xy: column 0 = X, column 1 = Y* (already standardized). Thresholds are
// given as Y*-quantile levels in (0, 1); every threshold needs at least 100
// exceedances.
CondLimitFit fit_location_scale(const Eigen::MatrixXd& xy,
                                const std::vector<double>& quantile_levels);

struct PsiTables {
  std::vector<double> c;
  std::vector<double> psi1;  // alpha(tc)/alpha(t), averaged over admissible t
  std::vector<double> psi2;  // (beta(tc)-beta(t))/alpha(t), averaged
};

// Tables are read off the fitted curves, interpolated linearly in log t
// (exact at grid nodes). GridMismatch if some c has no resolvable (t, tc).
PsiTables psi_estimates(const CondLimitFit& fit, const std::vector<double>& c_grid);

// True iff max_c |psi1(c) - 1| < tol and max_c |psi2(c)| < tol, the
// criterion equivalent to the limit measure being a product H x nu_1.
bool product_form_test(const PsiTables& tables, double tol);

struct GaussianCondOracle {
  explicit GaussianCondOracle(double rho_);

  double rho;
};

// mu([-inf, x] x (y, inf]) = Phi(x/sqrt(1-rho^2)) * y^-1, the closed-form
// limit of the bivariate-normal example; normalized so mu(.., (1, inf]) = 1.
double gaussian_oracle_mu(const GaussianCondOracle& oracle, double x, double y);

// a(t) = 1/sqrt(2 log t); b(t) solves t*(1 - Phi(b)) = 1 exactly (bisection,
// not the asymptotic expansion).
ScaleLocation gaussian_norming(double t);

// Empirical conditional CDF of X given Y* > t on the grid; the caller
// centers/scales X beforehand. Needs at least 100 exceedances.
Eigen::VectorXd conditional_cdf_empirical(const Eigen::MatrixXd& xy, double t,
                                          const Eigen::VectorXd& x_grid);

}  // namespace heavytail
