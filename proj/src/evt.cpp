#include "heavytail/evt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "heavytail/error.hpp"

namespace heavytail {

PsiParams::PsiParams(double rho_, double k_) : rho(rho_), k(k_) {
  if (k == 0.0) fail(Error::Code::InvalidSpec, "psi constant k must be nonzero");
}

double psi(double x, const PsiParams& p) {
  if (!(x > 0.0)) fail(Error::Code::NonPositiveArgument, "psi requires x > 0");
  if (p.rho == 0.0) return p.k * std::log(x);
  // expm1 keeps the rho -> 0 limit smooth.
  return p.k * std::expm1(p.rho * std::log(x)) / p.rho;
}

double psi_inverse(double y, double rho) {
  if (rho == 0.0) return std::exp(y);
  const double arg = 1.0 + rho * y;
  if (!(arg > 0.0)) fail(Error::Code::DomainViolation, "psi_inverse requires 1 + rho*y > 0");
  return std::exp(std::log1p(rho * y) / rho);
}

ScaleLocation norming_from_tail(const TailSpec& tail, double t) {
  const double b = quantile_b(tail, t);
  const double a = quantile_b(tail, t * M_E) - b;
  return ScaleLocation{a, b};
}

NormingPair norming_functions(const TailSpec& tail) {
  return NormingPair{[tail](double t) { return norming_from_tail(tail, t).scale; },
                     [tail](double t) { return norming_from_tail(tail, t).location; }};
}

Eigen::MatrixXd marginal_standardize(const Eigen::MatrixXd& sample,
                                     const std::vector<std::function<double(double)>>& transforms) {
  if (static_cast<Eigen::Index>(transforms.size()) != sample.cols()) {
    fail(Error::Code::InvalidSpec, "one transform per coordinate is required");
  }
  const Eigen::Index n = sample.rows();
  Eigen::MatrixXd out(n, sample.cols());
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < sample.cols(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = transforms[static_cast<std::size_t>(j)](sample(i, j));
    // monotone on the observed range: transformed values ordered like inputs
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return sample(a, j) < sample(b, j); });
    for (std::size_t p = 1; p < order.size(); ++p) {
      if (out(order[p], j) < out(order[p - 1], j)) {
        fail(Error::Code::NonMonotoneTransform,
             "transform for coordinate " + std::to_string(j) + " decreases on observed points");
      }
    }
  }
  return out;
}

double max_stable_cdf(const LimitMeasureSpec& m, const Eigen::VectorXd& x) {
  return std::exp(-nu_complement_box(m, x));
}

double max_stable_cdf(const LimitMeasureSpec& m, const std::vector<PsiParams>& psis,
                      const Eigen::VectorXd& x) {
  if (static_cast<Eigen::Index>(psis.size()) != x.size()) {
    fail(Error::Code::InvalidSpec, "one psi per coordinate is required");
  }
  Eigen::VectorXd corner(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto& p = psis[static_cast<std::size_t>(i)];
    corner[i] = psi_inverse(x[i] / p.k, p.rho);
  }
  return std::exp(-nu_complement_box(m, corner));
}

Eigen::MatrixXd block_maxima(const Eigen::MatrixXd& sample, Eigen::Index block) {
  if (block < 1) fail(Error::Code::BadBlockSize, "block size must be at least 1");
  const Eigen::Index blocks = sample.rows() / block;
  Eigen::MatrixXd out(blocks, sample.cols());
  for (Eigen::Index j = 0; j < blocks; ++j) {
    out.row(j) = sample.middleRows(j * block, block).colwise().maxCoeff();
  }
  return out;
}

}  // namespace heavytail
