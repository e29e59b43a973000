#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <functional>
#include <vector>

#include "heavytail/polar.hpp"

namespace heavytail {

// Decoupage de Levy: split an ordered sample by a set predicate, keeping
// original indices and the running visit count K_n.
struct DecoupageResult {
  Eigen::MatrixXd exceedances;                   // rows hitting B, in order
  std::vector<std::size_t> exceedance_indices;   // original positions
  Eigen::MatrixXd complement;                    // rows missing B, in order
  std::vector<std::size_t> complement_indices;
  std::vector<std::size_t> counts;               // K_j for j = 1..n
};

using SetPredicate = std::function<bool(const Eigen::VectorXd&)>;

DecoupageResult decoupage_split(const Eigen::MatrixXd& sample, const SetPredicate& in_b);

// Polar pairs of all points with ||x|| strictly above the threshold. The
// conditional law of (R/t, Theta) given R > t is the POT approximation
// target; ties at the threshold are excluded.
struct PolarExceedanceSet {
  double threshold;
  std::vector<PolarPair> pairs;
  Norm norm;
};

PolarExceedanceSet pot_exceedances(const Eigen::MatrixXd& sample, double threshold, Norm norm);

}  // namespace heavytail
