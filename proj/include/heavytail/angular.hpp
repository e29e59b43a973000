#pragma once

#include <Eigen/Core>
#include <vector>

#include "heavytail/norms.hpp"

namespace heavytail {

struct AngularAtom {
  Eigen::VectorXd direction;  // unit-norm, nonnegative components
  double weight;              // > 0
};

// Finite discrete measure on the intersection of the unit sphere with the
// nonnegative cone: the computable stand-in for an angular/spectral measure.
// Directions closer than 1e-9 in LInf distance are merged with weights
// summed, so atoms are distinct by construction.
class DiscreteAngularMeasure {
 public:
  DiscreteAngularMeasure(std::vector<AngularAtom> atoms, Norm norm);

  const std::vector<AngularAtom>& atoms() const noexcept { return atoms_; }
  Norm norm() const noexcept { return norm_; }
  Eigen::Index dim() const noexcept { return atoms_.front().direction.size(); }

  double total_weight() const;
  DiscreteAngularMeasure normalized() const;  // rescaled to total weight 1

  static constexpr double kMergeTolerance = 1e-9;

 private:
  std::vector<AngularAtom> atoms_;
  Norm norm_;
};

// Coarser merge used when comparing an empirical measure against a discrete
// truth: atoms within `tol` (LInf) of a heavier atom are absorbed into it.
DiscreteAngularMeasure cluster_atoms(const DiscreteAngularMeasure& measure, double tol);

}  // namespace heavytail
