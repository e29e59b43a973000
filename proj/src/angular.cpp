#include "heavytail/angular.hpp"

#include <algorithm>
#include <cmath>

#include "heavytail/error.hpp"

namespace heavytail {

namespace {

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

double linf_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).lpNorm<Eigen::Infinity>();
}

}  // namespace

DiscreteAngularMeasure::DiscreteAngularMeasure(std::vector<AngularAtom> atoms, Norm norm)
    : norm_(norm) {
  if (atoms.empty()) {
    fail(Error::Code::InvalidSpec, "angular measure requires at least one atom");
  }
  const Eigen::Index d = atoms.front().direction.size();
  for (auto& atom : atoms) {
    if (atom.direction.size() != d) {
      fail(Error::Code::InvalidSpec, "angular atoms have inconsistent dimensions");
    }
    if (!atom.direction.allFinite()) {
      fail(Error::Code::NonFinite, "angular atom direction must be finite");
    }
    if ((atom.direction.array() < 0.0).any()) {
      fail(Error::Code::InvalidSpec, "angular atom directions must be nonnegative");
    }
    if (!(atom.weight > 0.0) || !std::isfinite(atom.weight)) {
      fail(Error::Code::InvalidSpec, "angular atom weights must be positive");
    }
    const double r = norm_of(atom.direction, norm);
    if (std::fabs(r - 1.0) > 1e-6) {
      fail(Error::Code::InvalidSpec, "angular atom direction is not unit-norm");
    }
    atom.direction /= r;  // pin the invariant exactly
  }

  std::sort(atoms.begin(), atoms.end(),
            [](const AngularAtom& a, const AngularAtom& b) { return lex_less(a.direction, b.direction); });
  for (const auto& atom : atoms) {
    if (!atoms_.empty() && linf_distance(atoms_.back().direction, atom.direction) <= kMergeTolerance) {
      atoms_.back().weight += atom.weight;
    } else {
      atoms_.push_back(atom);
    }
  }
}

double DiscreteAngularMeasure::total_weight() const {
  double total = 0.0;
  for (const auto& atom : atoms_) total += atom.weight;
  return total;
}

DiscreteAngularMeasure DiscreteAngularMeasure::normalized() const {
  const double total = total_weight();
  std::vector<AngularAtom> scaled = atoms_;
  for (auto& atom : scaled) atom.weight /= total;
  return DiscreteAngularMeasure(std::move(scaled), norm_);
}

DiscreteAngularMeasure cluster_atoms(const DiscreteAngularMeasure& measure, double tol) {
  if (!(tol >= 0.0)) fail(Error::Code::InvalidSpec, "cluster tolerance must be nonnegative");
  std::vector<AngularAtom> atoms = measure.atoms();
  std::sort(atoms.begin(), atoms.end(),
            [](const AngularAtom& a, const AngularAtom& b) { return a.weight > b.weight; });
  std::vector<AngularAtom> clusters;
  for (const auto& atom : atoms) {
    bool absorbed = false;
    for (auto& cluster : clusters) {
      if (linf_distance(cluster.direction, atom.direction) <= tol) {
        cluster.weight += atom.weight;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) clusters.push_back(atom);
  }
  return DiscreteAngularMeasure(std::move(clusters), measure.norm());
}

}  // namespace heavytail
