#include "heavytail/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "heavytail/error.hpp"

namespace heavytail {

Eigen::Index default_k(Eigen::Index n) {
  return static_cast<Eigen::Index>(std::ceil(std::pow(static_cast<double>(n), 2.0 / 3.0)));
}

TailIndexEstimate hill(const Eigen::VectorXd& sample, Eigen::Index k) {
  const Eigen::Index n = sample.size();
  if (k < 1 || k >= n) fail(Error::Code::BadK, "hill requires 1 <= k < n");

  std::vector<double> top(sample.data(), sample.data() + n);
  // Only the k+1 largest values matter.
  std::nth_element(top.begin(), top.begin() + k, top.end(), std::greater<double>());
  top.resize(static_cast<std::size_t>(k) + 1);
  std::sort(top.begin(), top.end(), std::greater<double>());

  const double pivot = top[static_cast<std::size_t>(k)];  // X_(k+1)
  if (!(pivot > 0.0)) {
    fail(Error::Code::DegenerateSample, "hill requires the top k+1 order statistics to be positive");
  }
  if (top.front() == pivot) {
    fail(Error::Code::DegenerateSample, "hill: zero log-spacings (X_(1) = X_(k+1))");
  }
  double mean_spacing = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    mean_spacing += std::log(top[static_cast<std::size_t>(i)] / pivot);
  }
  mean_spacing /= static_cast<double>(k);
  return TailIndexEstimate{1.0 / mean_spacing, k, n};
}

TailIndexEstimate max_tail_index(const Eigen::MatrixXd& sample, Eigen::Index k) {
  return hill(sample.rowwise().maxCoeff(), k);
}

TailIndexEstimate min_tail_index(const Eigen::MatrixXd& sample, Eigen::Index k) {
  return hill(sample.rowwise().minCoeff(), k);
}

TailIndexEstimate linear_combination_tail(const Eigen::MatrixXd& sample,
                                          const Eigen::VectorXd& weights, LinearMode mode,
                                          Eigen::Index k) {
  if (weights.size() != sample.cols()) {
    fail(Error::Code::BadWeights, "weight vector dimension does not match the sample");
  }
  if (mode == LinearMode::MaxLinear) {
    if ((weights.array() < 0.0).any() || weights.isZero(0.0)) {
      fail(Error::Code::BadWeights, "max-linear weights must be nonnegative and not all zero");
    }
  } else {
    if ((weights.array() <= 0.0).any()) {
      fail(Error::Code::BadWeights, "min-linear weights must be strictly positive");
    }
  }
  const Eigen::MatrixXd scaled = sample.array().rowwise() * weights.transpose().array();
  if (mode == LinearMode::MaxLinear) return hill(scaled.rowwise().maxCoeff(), k);
  return hill(scaled.rowwise().minCoeff(), k);
}

AngularEstimate angular_estimate(const Eigen::MatrixXd& sample, double top_fraction, Norm norm) {
  const Eigen::Index n = sample.rows();
  if (!(top_fraction > 0.0) || !(top_fraction < 1.0)) {
    fail(Error::Code::InvalidSpec, "top_fraction must lie in (0, 1)");
  }
  const auto k = static_cast<Eigen::Index>(std::ceil(top_fraction * static_cast<double>(n)));
  if (k < 50) {
    fail(Error::Code::TooFewExceedances,
         "angular_estimate needs at least 50 points above the threshold");
  }

  Eigen::VectorXd radii(n);
  for (Eigen::Index i = 0; i < n; ++i) radii[i] = norm_of(sample.row(i).transpose(), norm);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::nth_element(order.begin(), order.begin() + k, order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return radii[a] > radii[b]; });

  const double weight = 1.0 / static_cast<double>(k);
  std::vector<AngularAtom> atoms;
  atoms.reserve(static_cast<std::size_t>(k));
  double threshold_radius = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < k; ++j) {
    const Eigen::Index i = order[static_cast<std::size_t>(j)];
    if (!(radii[i] > 0.0)) fail(Error::Code::ZeroVector, "angular_estimate: zero-radius point in the top set");
    atoms.push_back(AngularAtom{sample.row(i).transpose() / radii[i], weight});
    threshold_radius = std::min(threshold_radius, radii[i]);
  }
  return AngularEstimate{hill(radii, k), DiscreteAngularMeasure(std::move(atoms), norm),
                         threshold_radius};
}

namespace {

// 1-based ordinal ranks, ties broken by original index. Applying the same
// rule to each coordinate keeps lambda_hat exactly rank-invariant.
std::vector<Eigen::Index> ordinal_ranks(const Eigen::VectorXd& values) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values[a] != values[b]) return values[a] < values[b];
    return a < b;
  });
  std::vector<Eigen::Index> rank(static_cast<std::size_t>(n));
  for (Eigen::Index pos = 0; pos < n; ++pos) {
    rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos + 1;
  }
  return rank;
}

}  // namespace

double lambda_hat(const Eigen::MatrixXd& sample, double u) {
  if (sample.cols() != 2) fail(Error::Code::InvalidSpec, "lambda_hat expects a 2-column sample");
  if (!(u > 0.0) || !(u < 1.0)) fail(Error::Code::OutOfRange, "u must lie in (0, 1)");
  const Eigen::Index n = sample.rows();
  const double cut = u * static_cast<double>(n);

  const auto r1 = ordinal_ranks(sample.col(0));
  const auto r2 = ordinal_ranks(sample.col(1));
  Eigen::Index exceed = 0, joint = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<double>(r1[static_cast<std::size_t>(i)]) > cut) {
      ++exceed;
      if (static_cast<double>(r2[static_cast<std::size_t>(i)]) > cut) ++joint;
    }
  }
  if (exceed < 20) {
    fail(Error::Code::TooFewExceedances, "lambda_hat needs at least 20 points above the u-rank threshold");
  }
  return static_cast<double>(joint) / static_cast<double>(exceed);
}

const char* to_string(HrvVerdict v) {
  switch (v) {
    case HrvVerdict::HrvConsistent:
      return "HRV-consistent";
    case HrvVerdict::NoHrv:
      return "no-HRV";
    case HrvVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

HrvReport hrv_report(const Eigen::MatrixXd& sample, Eigen::Index k, double u,
                     const HrvTolerances& tol) {
  if (sample.cols() < 2) fail(Error::Code::InvalidSpec, "hrv_report expects dimension >= 2");
  HrvReport report;
  report.alpha = max_tail_index(sample, k);
  report.alpha0 = min_tail_index(sample, k);
  report.eta_hat = report.alpha.alpha_hat / report.alpha0.alpha_hat;
  // lambda is pairwise; use the first two coordinates.
  report.lambda = lambda_hat(sample.leftCols(2), u);
  report.u = u;

  const bool separated = report.alpha0.alpha_hat - report.alpha.alpha_hat >
                         tol.min_gap_rel * report.alpha.alpha_hat;
  const bool independent = report.lambda < tol.lambda_max;
  if (separated && independent) {
    report.verdict = HrvVerdict::HrvConsistent;
  } else if (!separated && !independent) {
    report.verdict = HrvVerdict::NoHrv;
  } else {
    report.verdict = HrvVerdict::Inconclusive;
  }
  return report;
}

AngularMass angular_finiteness_predicate(const TailSpec& generator) {
  return has_finite_mean(generator) ? AngularMass::Finite : AngularMass::Infinite;
}

}  // namespace heavytail
