#include "heavytail/samplers.hpp"

#include <algorithm>
#include <cmath>

#include "heavytail/error.hpp"
#include "heavytail/gaussian.hpp"

namespace heavytail {

double pareto_inverse_cdf(double u, double alpha) {
  if (!(alpha > 0.0)) fail(Error::Code::InvalidSpec, "Pareto index must be positive");
  if (!(u > 0.0) || !(u <= 1.0)) fail(Error::Code::OutOfRange, "u must lie in (0, 1]");
  return std::pow(u, -1.0 / alpha);
}

double pareto_sample(double alpha, RngStream& rng) {
  return pareto_inverse_cdf(rng.uniform01(), alpha);
}

PolarConstructionSpec::PolarConstructionSpec(double radius_alpha, DiscreteAngularMeasure angular)
    : radius_alpha_(radius_alpha), angular_(std::move(angular)) {
  if (!(radius_alpha_ > 0.0)) fail(Error::Code::InvalidSpec, "radius tail index must be positive");
  const double total = angular_.total_weight();
  if (std::fabs(total - 1.0) > 1e-12) {
    fail(Error::Code::InvalidSpec, "angular law must have total weight 1 (it is the law of Theta)");
  }
  cumulative_.reserve(angular_.atoms().size());
  double acc = 0.0;
  for (const auto& atom : angular_.atoms()) {
    acc += atom.weight;
    cumulative_.push_back(acc);
  }
  cumulative_.back() = 1.0;  // guard against rounding in the last bin
}

const Eigen::VectorXd& PolarConstructionSpec::pick_direction(double u) const {
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto idx = static_cast<std::size_t>(it - cumulative_.begin());
  return angular_.atoms()[std::min(idx, cumulative_.size() - 1)].direction;
}

Eigen::VectorXd polar_construction_sample(const PolarConstructionSpec& spec, RngStream& rng) {
  const double r = pareto_sample(spec.radius_alpha(), rng);
  const Eigen::VectorXd& theta = spec.pick_direction(rng.uniform01());
  return r * theta;
}

Eigen::Vector2d iid_pareto_pair(RngStream& rng) {
  const double z1 = pareto_sample(1.0, rng);
  const double z2 = pareto_sample(1.0, rng);
  return {z1, z2};
}

MixtureHrvSpec::MixtureHrvSpec(double alpha0, Eigen::Vector2d interior_direction, Norm norm)
    : alpha0_(alpha0), direction_(std::move(interior_direction)), norm_(norm) {
  if (!(alpha0_ > 1.0) || !(alpha0_ < 2.0)) {
    fail(Error::Code::InvalidSpec, "hidden index alpha0 must lie in (1, 2)");
  }
  if ((direction_.array() <= 0.0).any()) {
    fail(Error::Code::InvalidSpec, "interior direction must be strictly positive");
  }
  if (std::fabs(norm_of(direction_, norm_) - 1.0) > 1e-12) {
    fail(Error::Code::InvalidSpec, "interior direction must be unit-norm");
  }
}

MixtureHrvSpec MixtureHrvSpec::with_default_direction(double alpha0) {
  return MixtureHrvSpec(alpha0, Eigen::Vector2d{1.0, 1.0}, Norm::LInf);
}

Eigen::Vector2d mixture_hrv_sample(const MixtureHrvSpec& spec, RngStream& rng) {
  if (rng.bernoulli() == 1) {
    return iid_pareto_pair(rng);
  }
  return pareto_sample(spec.alpha0(), rng) * spec.interior_direction();
}

LineConstructionSpec::LineConstructionSpec(TailSpec generator) : generator_(std::move(generator)) {
  if (survival(generator_, 1.0) != 1.0) {
    fail(Error::Code::InvalidSpec, "line-construction generator must concentrate on (1, inf)");
  }
}

Eigen::Vector2d line_construction_sample(const LineConstructionSpec& spec, RngStream& rng) {
  const int b = rng.bernoulli();
  const double g = sample_from(spec.generator(), rng);
  const double r = pareto_sample(1.0, rng);
  return b == 1 ? Eigen::Vector2d{r * g, r} : Eigen::Vector2d{r, r * g};
}

Eigen::Vector2d inv_uniform_pair(RngStream& rng) {
  double u = rng.uniform01();
  while (u == 1.0) u = rng.uniform01();  // keep 1/(1-U) finite
  return {1.0 / u, 1.0 / (1.0 - u)};
}

namespace {

Eigen::Vector2d correlated_normals(double rho, RngStream& rng) {
  if (!(std::fabs(rho) < 1.0)) {
    fail(Error::Code::DegenerateCorrelation, "correlation must satisfy |rho| < 1");
  }
  const double n1 = rng.normal();
  const double n2 = rng.normal();
  // The paper's linear construction: first coordinate carries the mixing.
  return {std::sqrt(1.0 - rho * rho) * n1 + rho * n2, n2};
}

}  // namespace

Eigen::Vector2d gaussian_copula_pair(double rho, RngStream& rng) {
  const Eigen::Vector2d n = correlated_normals(rho, rng);
  return {1.0 / normal_cdf(n[0]), 1.0 / normal_cdf(n[1])};
}

Eigen::Vector2d bivariate_normal_pair(double rho, RngStream& rng) {
  return correlated_normals(rho, rng);
}

}  // namespace heavytail
