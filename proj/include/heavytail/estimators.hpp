#pragma once

#include <Eigen/Core>

#include "heavytail/angular.hpp"
#include "heavytail/tails.hpp"

namespace heavytail {

struct TailIndexEstimate {
  double alpha_hat;
  Eigen::Index k;  // order statistics used
  Eigen::Index n;  // sample size
};

// ceil(n^(2/3)), the library default when no k is given.
Eigen::Index default_k(Eigen::Index n);

// Hill estimator with descending order statistics X_(1) >= ... >= X_(n):
// alpha_hat = [ (1/k) sum_{i<=k} log(X_(i)/X_(k+1)) ]^-1. Scale-free.
TailIndexEstimate hill(const Eigen::VectorXd& sample, Eigen::Index k);

// Hill applied to componentwise maxima resp. minima: the full-cone index
// alpha and the hidden (interior-cone) index alpha0.
TailIndexEstimate max_tail_index(const Eigen::MatrixXd& sample, Eigen::Index k);
TailIndexEstimate min_tail_index(const Eigen::MatrixXd& sample, Eigen::Index k);

enum class LinearMode { MaxLinear, MinLinear };

// Hill applied to max_i s_i Z_i (weights >= 0, not all zero) or
// min_i a_i Z_i (weights strictly positive).
TailIndexEstimate linear_combination_tail(const Eigen::MatrixXd& sample,
                                          const Eigen::VectorXd& weights, LinearMode mode,
                                          Eigen::Index k);

// Empirical angular measure: unit directions of the k = ceil(f*n)
// largest-radius points with equal weights 1/k, plus the Hill estimate of
// the radius tail at that k. Exactly coincident directions merge.
struct AngularEstimate {
  TailIndexEstimate index;
  DiscreteAngularMeasure angular;
  double threshold_radius;  // smallest radius among the retained points
};

AngularEstimate angular_estimate(const Eigen::MatrixXd& sample, double top_fraction, Norm norm);

// Rank-based upper tail dependence: P-hat[F2(Z2) > u | F1(Z1) > u] with
// empirical-CDF (rank) margins; exactly invariant under strictly increasing
// coordinatewise transforms.
double lambda_hat(const Eigen::MatrixXd& sample, double u);

enum class HrvVerdict { HrvConsistent, NoHrv, Inconclusive };

const char* to_string(HrvVerdict v);

struct HrvTolerances {
  double min_gap_rel = 0.2;  // require alpha0_hat - alpha_hat > min_gap_rel * alpha_hat
  double lambda_max = 0.05;  // and lambda_hat(u) below this
};

struct HrvReport {
  TailIndexEstimate alpha;   // from componentwise maxima
  TailIndexEstimate alpha0;  // from componentwise minima
  double eta_hat;            // alpha_hat / alpha0_hat
  double lambda;
  double u;
  HrvVerdict verdict;
};

// HRV-consistent: the hidden index separates from the full-cone index AND
// the tail dependence is negligible. no-HRV: neither holds. The two mixed
// cases are inconclusive. Deterministic in (estimates, tolerances).
HrvReport hrv_report(const Eigen::MatrixXd& sample, Eigen::Index k, double u,
                     const HrvTolerances& tol = {});

enum class AngularMass { Finite, Infinite };

// Whether the hidden angular measure of the line construction with
// generator G is finite: finite iff the survival integral of G converges
// (for ParetoTail, iff alpha > 1). Unsupported for EmpiricalTail.
AngularMass angular_finiteness_predicate(const TailSpec& generator);

}  // namespace heavytail
