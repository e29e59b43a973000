#pragma once

#include <Eigen/Core>
#include <utility>

#include "heavytail/angular.hpp"

namespace heavytail {

// Limit measure in spectral form: nu = scale * (alpha r^-alpha-1 dr x S).
// Evaluation on boxes with strictly positive corners only; the measure is
// homogeneous of order -alpha by construction.
class LimitMeasureSpec {
 public:
  LimitMeasureSpec(double alpha, DiscreteAngularMeasure angular, double scale = 1.0);

  double alpha() const noexcept { return alpha_; }
  const DiscreteAngularMeasure& angular() const noexcept { return angular_; }
  double scale() const noexcept { return scale_; }

 private:
  double alpha_;
  DiscreteAngularMeasure angular_;
  double scale_;
};

// nu(corner, inf] = scale * sum_a w_a * (min_i a_i/x_i)^alpha.
double nu_open_box(const LimitMeasureSpec& m, const Eigen::VectorXd& corner);

// nu([0, corner]^c) = scale * sum_a w_a * (max_i a_i/x_i)^alpha.
double nu_complement_box(const LimitMeasureSpec& m, const Eigen::VectorXd& corner);

// Two-tail limit measure on [-inf, inf] \ {0}: upper mass c+ x^-alpha,
// lower mass c- x^-alpha, with tail-balance constants p, q.
struct TwoTailSpec {
  TwoTailSpec(double c_plus, double c_minus, double alpha);

  double c_plus;
  double c_minus;
  double alpha;
};

enum class TailSide { Upper, Lower };

double two_tail_eval(const TwoTailSpec& s, TailSide side, double x);

// (p, q) = (c+/(c+ + c-), 1 - p); sums to 1 exactly.
std::pair<double, double> two_tail_pq(const TwoTailSpec& s);

}  // namespace heavytail
