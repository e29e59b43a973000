#pragma once

#include <variant>
#include <vector>

#include "heavytail/rng.hpp"

namespace heavytail {

// One-dimensional tail models backing the quantile function
// b(t) = (1/(1-F))^{<-}(t) and the generator draws of the line construction.

struct ParetoTail {
  double alpha;  // survival x^-alpha on [1, inf)
};

struct ExponentialTail {
  double rate;
};

struct UniformTail {};  // uniform on (0, 1)

struct EmpiricalTail {
  std::vector<double> sorted;  // ascending

  static EmpiricalTail of(std::vector<double> sample);
};

using TailSpec = std::variant<ParetoTail, ExponentialTail, UniformTail, EmpiricalTail>;

// P[X > x] under the model.
double survival(const TailSpec& tail, double x);

// Quantile function b(t) for t > 1. For EmpiricalTail with descending order
// statistics X_(1) >= ... >= X_(n), b(t) = X_(ceil(n/t)), the k-th-largest
// convention of Hill-type estimators; t > n is out of range.
double quantile_b(const TailSpec& tail, double t);

// Inverse-transform draw (one uniform).
double sample_from(const TailSpec& tail, RngStream& rng);

// Whether the survival integral over (0, inf) converges, i.e. the mean
// exists. Closed-form for the parametric tails; Unsupported for EmpiricalTail.
bool has_finite_mean(const TailSpec& tail);

}  // namespace heavytail
