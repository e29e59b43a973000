#pragma once

#include <Eigen/Core>
#include <string>

#include "heavytail/error.hpp"

namespace heavytail {

// The norm choice propagates through polar transforms, angular measures and
// exceedance sets. L1 is the library default (unit sphere = the simplex).
enum class Norm { L1, L2, LInf };

template <typename Derived>
double norm_of(const Eigen::MatrixBase<Derived>& x, Norm kind) {
  switch (kind) {
    case Norm::L1:
      return x.template lpNorm<1>();
    case Norm::L2:
      return x.template lpNorm<2>();
    case Norm::LInf:
      return x.template lpNorm<Eigen::Infinity>();
  }
  fail(Error::Code::InvalidSpec, "unknown norm kind");
}

inline const char* to_string(Norm kind) {
  switch (kind) {
    case Norm::L1:
      return "l1";
    case Norm::L2:
      return "l2";
    case Norm::LInf:
      return "linf";
  }
  return "?";
}

inline Norm norm_from_string(const std::string& s) {
  if (s == "l1") return Norm::L1;
  if (s == "l2") return Norm::L2;
  if (s == "linf") return Norm::LInf;
  fail(Error::Code::InvalidSpec, "unknown norm '" + s + "' (expected l1|l2|linf)");
}

}  // namespace heavytail
