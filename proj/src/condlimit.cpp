#include "heavytail/condlimit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "heavytail/error.hpp"
#include "heavytail/gaussian.hpp"

namespace heavytail {

MonotoneMap identity_map() {
  return MonotoneMap{[](double y) { return y; }, [](double y) { return y; }};
}

MonotoneMap log_map() {
  return MonotoneMap{[](double t) { return std::log(t); }, [](double y) { return std::exp(y); }};
}

MonotoneMap gaussian_quantile_map() {
  return MonotoneMap{[](double t) { return normal_upper_quantile(1.0 / t); },
                     [](double y) { return 1.0 / normal_sf(y); }};
}

Eigen::VectorXd standardize_y(const Eigen::VectorXd& y, const MonotoneMap& b) {
  if (!b.inverse) fail(Error::Code::InvalidSpec, "standardize_y requires a computable inverse");
  const Eigen::Index n = y.size();
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = b.inverse(y[i]);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index c) { return y[a] < y[c]; });
  for (std::size_t p = 1; p < order.size(); ++p) {
    if (out[order[p]] < out[order[p - 1]]) {
      fail(Error::Code::NonMonotoneTransform, "b-inverse decreases on observed points");
    }
  }
  return out;
}

namespace {

// Type-7 (linear interpolation) quantile of an unsorted copy.
double interpolated_quantile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double w = pos - static_cast<double>(lo);
  return (1.0 - w) * values[lo] + w * values[hi];
}

}  // namespace

CondLimitFit fit_location_scale(const Eigen::MatrixXd& xy,
                                const std::vector<double>& quantile_levels) {
  if (xy.cols() != 2) fail(Error::Code::InvalidSpec, "fit_location_scale expects columns (X, Y*)");
  if (quantile_levels.empty()) fail(Error::Code::InvalidSpec, "at least one threshold level required");
  for (std::size_t j = 0; j < quantile_levels.size(); ++j) {
    const double q = quantile_levels[j];
    if (!(q > 0.0) || !(q < 1.0)) fail(Error::Code::InvalidSpec, "threshold levels must lie in (0, 1)");
    if (j > 0 && !(q > quantile_levels[j - 1])) {
      fail(Error::Code::InvalidSpec, "threshold levels must be strictly increasing");
    }
  }

  const Eigen::Index n = xy.rows();
  std::vector<double> ystar(xy.col(1).data(), xy.col(1).data() + n);
  std::sort(ystar.begin(), ystar.end());

  const auto m = quantile_levels.size();
  CondLimitFit fit;
  fit.thresholds.resize(static_cast<Eigen::Index>(m));
  fit.beta_hat.resize(static_cast<Eigen::Index>(m));
  fit.alpha_scale_hat.resize(static_cast<Eigen::Index>(m));

  for (std::size_t j = 0; j < m; ++j) {
    const auto rank = static_cast<std::size_t>(
        std::ceil(quantile_levels[j] * static_cast<double>(n)));
    const double t = ystar[std::min(rank, static_cast<std::size_t>(n)) - 1];

    std::vector<double> xs;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (xy(i, 1) > t) xs.push_back(xy(i, 0));
    }
    if (xs.size() < 100) {
      fail(Error::Code::TooFewExceedances,
           "fit_location_scale needs >= 100 exceedances at every threshold");
    }
    const double median = interpolated_quantile(xs, 0.5);
    const double iqr = interpolated_quantile(xs, 0.75) - interpolated_quantile(xs, 0.25);
    if (!(iqr > 0.0)) {
      fail(Error::Code::DegenerateConditional, "conditional interquartile range is zero");
    }
    fit.thresholds[static_cast<Eigen::Index>(j)] = t;
    fit.beta_hat[static_cast<Eigen::Index>(j)] = median;
    fit.alpha_scale_hat[static_cast<Eigen::Index>(j)] = iqr;
  }
  for (Eigen::Index j = 1; j < fit.thresholds.size(); ++j) {
    if (!(fit.thresholds[j] > fit.thresholds[j - 1])) {
      fail(Error::Code::InvalidSpec, "threshold grid is not strictly increasing on this sample");
    }
  }
  return fit;
}

namespace {

// Linear interpolation in log t along the fitted grid; exact at the nodes.
double interp_log_t(const Eigen::VectorXd& ts, const Eigen::VectorXd& values, double t) {
  const Eigen::Index m = ts.size();
  if (t <= ts[0]) return values[0];
  if (t >= ts[m - 1]) return values[m - 1];
  Eigen::Index hi = 1;
  while (ts[hi] < t) ++hi;
  const double w = (std::log(t) - std::log(ts[hi - 1])) / (std::log(ts[hi]) - std::log(ts[hi - 1]));
  return (1.0 - w) * values[hi - 1] + w * values[hi];
}

}  // namespace

PsiTables psi_estimates(const CondLimitFit& fit, const std::vector<double>& c_grid) {
  if (fit.thresholds.size() < 1) fail(Error::Code::InvalidSpec, "empty threshold fit");
  if (c_grid.empty()) fail(Error::Code::InvalidSpec, "empty c grid");
  const double t_min = fit.thresholds[0];
  const double t_max = fit.thresholds[fit.thresholds.size() - 1];

  PsiTables tables;
  for (double c : c_grid) {
    if (!(c > 0.0)) fail(Error::Code::InvalidSpec, "ratio grid entries must be positive");
    double sum1 = 0.0, sum2 = 0.0;
    int used = 0;
    for (Eigen::Index i = 0; i < fit.thresholds.size(); ++i) {
      const double t = fit.thresholds[i];
      const double tc = t * c;
      if (tc < t_min || tc > t_max) continue;
      const double a_t = fit.alpha_scale_hat[i];
      const double a_tc = interp_log_t(fit.thresholds, fit.alpha_scale_hat, tc);
      const double b_t = fit.beta_hat[i];
      const double b_tc = interp_log_t(fit.thresholds, fit.beta_hat, tc);
      sum1 += a_tc / a_t;
      sum2 += (b_tc - b_t) / a_t;
      ++used;
    }
    if (used == 0) {
      fail(Error::Code::GridMismatch,
           "no (t, tc) pair resolvable for c = " + std::to_string(c));
    }
    tables.c.push_back(c);
    tables.psi1.push_back(sum1 / used);
    tables.psi2.push_back(sum2 / used);
  }
  return tables;
}

bool product_form_test(const PsiTables& tables, double tol) {
  if (tables.c.empty()) fail(Error::Code::InvalidSpec, "product_form_test requires nonempty tables");
  if (!(tol > 0.0)) fail(Error::Code::InvalidSpec, "tolerance must be positive");
  double dev1 = 0.0, dev2 = 0.0;
  for (std::size_t i = 0; i < tables.c.size(); ++i) {
    dev1 = std::max(dev1, std::fabs(tables.psi1[i] - 1.0));
    dev2 = std::max(dev2, std::fabs(tables.psi2[i]));
  }
  return dev1 < tol && dev2 < tol;
}

GaussianCondOracle::GaussianCondOracle(double rho_) : rho(rho_) {
  if (!(std::fabs(rho) < 1.0)) {
    fail(Error::Code::DegenerateCorrelation, "oracle requires |rho| < 1");
  }
}

double gaussian_oracle_mu(const GaussianCondOracle& oracle, double x, double y) {
  if (!(y > 0.0)) fail(Error::Code::DomainViolation, "gaussian_oracle_mu requires y > 0");
  if (std::isnan(x)) fail(Error::Code::DomainViolation, "gaussian_oracle_mu requires x != NaN");
  return normal_cdf(x / std::sqrt(1.0 - oracle.rho * oracle.rho)) / y;
}

ScaleLocation gaussian_norming(double t) {
  if (!(t > 1.0)) fail(Error::Code::OutOfRange, "gaussian_norming requires t > 1");
  return ScaleLocation{1.0 / std::sqrt(2.0 * std::log(t)), normal_upper_quantile(1.0 / t)};
}

Eigen::VectorXd conditional_cdf_empirical(const Eigen::MatrixXd& xy, double t,
                                          const Eigen::VectorXd& x_grid) {
  if (xy.cols() != 2) fail(Error::Code::InvalidSpec, "conditional_cdf_empirical expects columns (X, Y*)");
  std::vector<double> xs;
  for (Eigen::Index i = 0; i < xy.rows(); ++i) {
    if (xy(i, 1) > t) xs.push_back(xy(i, 0));
  }
  if (xs.size() < 100) {
    fail(Error::Code::TooFewExceedances, "conditional_cdf_empirical needs >= 100 exceedances");
  }
  std::sort(xs.begin(), xs.end());
  Eigen::VectorXd cdf(x_grid.size());
  for (Eigen::Index j = 0; j < x_grid.size(); ++j) {
    const auto it = std::upper_bound(xs.begin(), xs.end(), x_grid[j]);
    cdf[j] = static_cast<double>(it - xs.begin()) / static_cast<double>(xs.size());
  }
  return cdf;
}

}  // namespace heavytail
