#include "heavytail/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heavytail/error.hpp"

namespace heavytail {

namespace {

void check_corner(const LimitMeasureSpec& m, const Eigen::VectorXd& corner) {
  if (corner.size() != m.angular().dim()) {
    fail(Error::Code::InvalidSpec, "box corner dimension does not match the angular measure");
  }
  if (!corner.allFinite() || (corner.array() <= 0.0).any()) {
    fail(Error::Code::NonPositiveBox, "box corners must be strictly positive and finite");
  }
}

}  // namespace

LimitMeasureSpec::LimitMeasureSpec(double alpha, DiscreteAngularMeasure angular, double scale)
    : alpha_(alpha), angular_(std::move(angular)), scale_(scale) {
  if (!(alpha > 0.0)) fail(Error::Code::InvalidSpec, "tail index alpha must be positive");
  if (!(scale > 0.0)) fail(Error::Code::InvalidSpec, "measure scale must be positive");
}

double nu_open_box(const LimitMeasureSpec& m, const Eigen::VectorXd& corner) {
  check_corner(m, corner);
  double total = 0.0;
  for (const auto& atom : m.angular().atoms()) {
    const double ratio = (atom.direction.array() / corner.array()).minCoeff();
    if (ratio > 0.0) total += atom.weight * std::pow(ratio, m.alpha());
  }
  return m.scale() * total;
}

double nu_complement_box(const LimitMeasureSpec& m, const Eigen::VectorXd& corner) {
  check_corner(m, corner);
  double total = 0.0;
  for (const auto& atom : m.angular().atoms()) {
    const double ratio = (atom.direction.array() / corner.array()).maxCoeff();
    total += atom.weight * std::pow(ratio, m.alpha());
  }
  return m.scale() * total;
}

TwoTailSpec::TwoTailSpec(double cp, double cm, double a) : c_plus(cp), c_minus(cm), alpha(a) {
  if (!(c_plus >= 0.0) || !(c_minus >= 0.0) || c_plus + c_minus <= 0.0) {
    fail(Error::Code::InvalidSpec, "two-tail constants must be nonnegative and not both zero");
  }
  if (!(alpha > 0.0)) fail(Error::Code::InvalidSpec, "two-tail index alpha must be positive");
}

double two_tail_eval(const TwoTailSpec& s, TailSide side, double x) {
  if (!(x > 0.0)) fail(Error::Code::OutOfRange, "two_tail_eval requires x > 0");
  const double c = side == TailSide::Upper ? s.c_plus : s.c_minus;
  return c * std::pow(x, -s.alpha);
}

std::pair<double, double> two_tail_pq(const TwoTailSpec& s) {
  const double p = s.c_plus / (s.c_plus + s.c_minus);
  return {p, 1.0 - p};
}

}  // namespace heavytail
