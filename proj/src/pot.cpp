#include "heavytail/pot.hpp"

#include "heavytail/error.hpp"

namespace heavytail {

DecoupageResult decoupage_split(const Eigen::MatrixXd& sample, const SetPredicate& in_b) {
  const Eigen::Index n = sample.rows();
  if (n == 0) fail(Error::Code::EmptyInput, "decoupage_split requires a nonempty sample");

  std::vector<std::size_t> hit, miss;
  std::vector<std::size_t> counts(static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (in_b(sample.row(i).transpose())) {
      hit.push_back(static_cast<std::size_t>(i));
      ++k;
    } else {
      miss.push_back(static_cast<std::size_t>(i));
    }
    counts[static_cast<std::size_t>(i)] = k;
  }

  DecoupageResult result;
  result.exceedances.resize(static_cast<Eigen::Index>(hit.size()), sample.cols());
  for (std::size_t j = 0; j < hit.size(); ++j) {
    result.exceedances.row(static_cast<Eigen::Index>(j)) = sample.row(static_cast<Eigen::Index>(hit[j]));
  }
  result.complement.resize(static_cast<Eigen::Index>(miss.size()), sample.cols());
  for (std::size_t j = 0; j < miss.size(); ++j) {
    result.complement.row(static_cast<Eigen::Index>(j)) = sample.row(static_cast<Eigen::Index>(miss[j]));
  }
  result.exceedance_indices = std::move(hit);
  result.complement_indices = std::move(miss);
  result.counts = std::move(counts);
  return result;
}

PolarExceedanceSet pot_exceedances(const Eigen::MatrixXd& sample, double threshold, Norm norm) {
  if (!(threshold > 0.0)) fail(Error::Code::OutOfRange, "POT threshold must be positive");
  PolarExceedanceSet set{threshold, {}, norm};
  for (Eigen::Index i = 0; i < sample.rows(); ++i) {
    const Eigen::VectorXd x = sample.row(i).transpose();
    const double r = norm_of(x, norm);
    if (r > threshold) {
      set.pairs.push_back(PolarPair{r, x / r, norm});
    }
  }
  return set;
}

}  // namespace heavytail
