#pragma once

#include <Eigen/Core>
#include <vector>

#include "heavytail/angular.hpp"
#include "heavytail/rng.hpp"
#include "heavytail/tails.hpp"

namespace heavytail {

// Exact seeded generators for the worked example distributions. Every
// sampler is a pure function of (spec, rng state); the number of uniforms
// consumed per draw is fixed, so sequences are reproducible position by
// position.

// u in (0, 1] -> u^{-1/alpha}, the Pareto(alpha) inverse transform on (1, inf).
double pareto_inverse_cdf(double u, double alpha);

double pareto_sample(double alpha, RngStream& rng);

// Z = R * Theta with R Pareto(alpha), Theta drawn from a discrete angular
// law, R independent of Theta. Consumes two uniforms per draw.
class PolarConstructionSpec {
 public:
  PolarConstructionSpec(double radius_alpha, DiscreteAngularMeasure angular);

  double radius_alpha() const noexcept { return radius_alpha_; }
  const DiscreteAngularMeasure& angular() const noexcept { return angular_; }
  const Eigen::VectorXd& pick_direction(double u) const;

 private:
  double radius_alpha_;
  DiscreteAngularMeasure angular_;   // total weight 1 within 1e-12
  std::vector<double> cumulative_;   // last entry pinned to 1
};

Eigen::VectorXd polar_construction_sample(const PolarConstructionSpec& spec, RngStream& rng);

// Two independent Pareto(1) coordinates.
Eigen::Vector2d iid_pareto_pair(RngStream& rng);

// Z = B*Y + (1-B)*U with B a fair coin, Y an iid Pareto(1) pair and U a
// polar-construction draw with index alpha0 concentrated on one strictly
// interior direction.
class MixtureHrvSpec {
 public:
  MixtureHrvSpec(double alpha0, Eigen::Vector2d interior_direction, Norm norm);

  // Default interior law: point mass at (1, 1), unit in LInf.
  static MixtureHrvSpec with_default_direction(double alpha0);

  double alpha0() const noexcept { return alpha0_; }
  const Eigen::Vector2d& interior_direction() const noexcept { return direction_; }
  Norm norm() const noexcept { return norm_; }

 private:
  double alpha0_;
  Eigen::Vector2d direction_;
  Norm norm_;
};

Eigen::Vector2d mixture_hrv_sample(const MixtureHrvSpec& spec, RngStream& rng);

// Theta = B*(G, 1) + (1-B)*(1, G) with G drawn from a generator on (1, inf),
// Z = R*Theta with R Pareto(1); min(Z) = R > 1 always.
class LineConstructionSpec {
 public:
  explicit LineConstructionSpec(TailSpec generator);

  const TailSpec& generator() const noexcept { return generator_; }

 private:
  TailSpec generator_;
};

Eigen::Vector2d line_construction_sample(const LineConstructionSpec& spec, RngStream& rng);

// Z = (1/U, 1/(1-U)) from a single uniform.
Eigen::Vector2d inv_uniform_pair(RngStream& rng);

// (1/Phi(N1), 1/Phi(N2)) with correlated standard normals; each marginal is
// exactly Pareto(1) on (1, inf).
Eigen::Vector2d gaussian_copula_pair(double rho, RngStream& rng);

// (X, Y) = (sqrt(1-rho^2) N1 + rho N2, N2).
Eigen::Vector2d bivariate_normal_pair(double rho, RngStream& rng);

// n draws stacked as rows.
template <typename Sampler>
Eigen::MatrixXd draw_matrix(Eigen::Index n, Sampler&& sampler, RngStream& rng) {
  Eigen::MatrixXd out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd row = sampler(rng);
    if (i == 0) out.resize(n, row.size());
    out.row(i) = row;
  }
  return out;
}

}  // namespace heavytail
