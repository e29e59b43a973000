// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "heavytail/condlimit.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/evt.hpp"
#include "heavytail/gaussian.hpp"
#include "heavytail/measures.hpp"
#include "heavytail/pot.hpp"
#include "heavytail/samplers.hpp"
#include "test_support.hpp"

using namespace heavytail;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED: ") + what;
  }
};

Eigen::MatrixXd pareto_pairs(Eigen::Index n, std::uint64_t seed) {
  RngStream rng(seed);
  return draw_matrix(n, [](RngStream& r) -> Eigen::VectorXd { return iid_pareto_pair(r); }, rng);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// ---- 1. hidden-regular-variation indices ----------------------------------

Outcome hidden_indices() {
  Outcome out;
  const Eigen::MatrixXd sample = pareto_pairs(100000, 101);
  const auto report = hrv_report(sample, 1000, 0.99);
  out.require(report.alpha.alpha_hat >= 0.9 && report.alpha.alpha_hat <= 1.1,
              "alpha_hat = " + fmt(report.alpha.alpha_hat) + " in [0.9, 1.1]");
  out.require(report.alpha0.alpha_hat >= 1.8 && report.alpha0.alpha_hat <= 2.2,
              "alpha0_hat = " + fmt(report.alpha0.alpha_hat) + " in [1.8, 2.2]");
  out.require(report.eta_hat >= 0.4 && report.eta_hat <= 0.6,
              "eta_hat = " + fmt(report.eta_hat) + " in [0.4, 0.6]");
  out.require(report.verdict == HrvVerdict::HrvConsistent,
              std::string("verdict = ") + to_string(report.verdict));
  return out;
}

// ---- 2. hidden limit-measure Monte Carlo oracle ----------------------------

Outcome hidden_limit_measure() {
  Outcome out;
  const double t = 1e4;
  const double cut = std::sqrt(t);
  const long n = 10000000;
  RngStream rng(102);
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    const Eigen::Vector2d z = iid_pareto_pair(rng);
    if (z[0] > cut && z[1] > cut) ++hits;
  }
  const double estimate = t * static_cast<double>(hits) / static_cast<double>(n);
  out.require(std::fabs(estimate - 1.0) < 0.10,
              "t*P[Z/sqrt(t) > (1,1)] = " + fmt(estimate) + " within 10% of 1");
  return out;
}

// ---- 3. spectral recovery ---------------------------------------------------

Outcome spectral_recovery() {
  Outcome out;
  for (const double alpha : {1.0, 2.0}) {
    const PolarConstructionSpec spec{
        alpha, DiscreteAngularMeasure({{Eigen::Vector2d{1, 0}, 0.3}, {Eigen::Vector2d{0, 1}, 0.7}},
                                      Norm::L1)};
    RngStream rng(103 + static_cast<std::uint64_t>(alpha));
    const Eigen::MatrixXd sample = draw_matrix(
        1000000, [&](RngStream& r) -> Eigen::VectorXd { return polar_construction_sample(spec, r); },
        rng);
    const auto est = angular_estimate(sample, 0.01, Norm::L1);
    const auto clustered = cluster_atoms(est.angular, 0.05);

    // total variation against the two-atom truth
    double tv = 0.0;
    double matched = 0.0;
    for (const auto& atom : clustered.atoms()) {
      const double truth = atom.direction[0] > 0.5 ? 0.3 : 0.7;
      tv += std::fabs(atom.weight - truth);
      matched += atom.weight;
    }
    tv = 0.5 * (tv + (1.0 - matched));
    out.require(tv <= 0.05, "alpha=" + fmt(alpha) + ": angular TV = " + fmt(tv) + " <= 0.05");
    out.require(std::fabs(est.index.alpha_hat - alpha) <= 0.1 * alpha,
                "alpha=" + fmt(alpha) + ": alpha_hat = " + fmt(est.index.alpha_hat) +
                    " within 10%");
  }
  return out;
}

// ---- 4. decoupage -----------------------------------------------------------

Outcome decoupage() {
  Outcome out;
  const long n = 10000;
  RngStream rng(104);
  Eigen::MatrixXd radii(n, 1);
  for (long i = 0; i < n; ++i) radii(i, 0) = pareto_sample(1.0, rng);

  const double t = 10.0;  // the 0.9 quantile of Pareto(1)
  const auto split =
      decoupage_split(radii, [t](const Eigen::VectorXd& x) { return x[0] > t; });
  const double kn = static_cast<double>(split.counts.back());
  const double sigma = std::sqrt(static_cast<double>(n) * 0.1 * 0.9);
  out.require(std::fabs(kn - 1000.0) <= 3.0 * sigma,
              "K_n = " + fmt(kn) + " within 3 sigma of 1000");

  std::vector<double> ratios;
  for (Eigen::Index i = 0; i < split.exceedances.rows(); ++i) {
    ratios.push_back(split.exceedances(i, 0) / t);
  }
  const auto pareto1_cdf = [](double x) { return x <= 1.0 ? 0.0 : 1.0 - 1.0 / x; };
  const double ks = testsupport::ks_statistic(ratios, pareto1_cdf);
  const double crit = testsupport::ks_critical_1pct(ratios.size());
  out.require(ks < crit, "exceedance-ratio KS = " + fmt(ks) + " < " + fmt(crit) + " (1% level)");
  return out;
}

// ---- 5. max-stable limit ----------------------------------------------------

Outcome max_stable_limit() {
  Outcome out;
  const Eigen::Index block = 1000;
  const Eigen::Index blocks = 10000;
  const Eigen::MatrixXd sample = pareto_pairs(block * blocks, 105);
  const Eigen::MatrixXd maxima = block_maxima(sample, block) / static_cast<double>(block);

  double sup = 0.0;
  for (const double x1 : {0.5, 1.0, 2.0}) {
    for (const double x2 : {0.5, 1.0, 2.0}) {
      Eigen::Index below = 0;
      for (Eigen::Index i = 0; i < maxima.rows(); ++i) {
        if (maxima(i, 0) <= x1 && maxima(i, 1) <= x2) ++below;
      }
      const double empirical = static_cast<double>(below) / static_cast<double>(maxima.rows());
      const double limit = std::exp(-1.0 / x1 - 1.0 / x2);
      sup = std::max(sup, std::fabs(empirical - limit));
    }
  }
  out.require(sup <= 0.05, "sup-distance to exp(-1/x1 - 1/x2) = " + fmt(sup) + " <= 0.05");
  return out;
}

// ---- 6. conditioned limit ---------------------------------------------------

Outcome conditioned_limit() {
  Outcome out;
  const double rho = 0.5;
  const Eigen::Index n = 10000000;
  RngStream rng(106);
  Eigen::MatrixXd xy(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector2d z = bivariate_normal_pair(rho, rng);
    xy(i, 0) = z[0];
    xy(i, 1) = z[1];
  }
  Eigen::MatrixXd std_xy(n, 2);
  std_xy.col(0) = xy.col(0);
  std_xy.col(1) = standardize_y(xy.col(1), gaussian_quantile_map());

  // (a) conditional CDF of X - rho*b(t) given Y* > t at the largest
  // threshold leaving >= 1e3 exceedances
  std::vector<double> ystar(std_xy.col(1).data(), std_xy.col(1).data() + n);
  std::nth_element(ystar.begin(), ystar.begin() + 999, ystar.end(), std::greater<double>());
  const double t = ystar[999];
  const double center = rho * gaussian_norming(t).location;

  Eigen::MatrixXd shifted(n, 2);
  shifted.col(0) = std_xy.col(0).array() - center;
  shifted.col(1) = std_xy.col(1);
  Eigen::VectorXd grid(25);
  for (Eigen::Index i = 0; i < grid.size(); ++i) grid[i] = -3.0 + 0.25 * static_cast<double>(i);
  const Eigen::VectorXd cdf = conditional_cdf_empirical(shifted, t, grid);
  double sup = 0.0;
  const double s = std::sqrt(1.0 - rho * rho);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    sup = std::max(sup, std::fabs(cdf[i] - normal_cdf(grid[i] / s)));
  }
  out.require(sup <= 0.05, "cond-CDF sup-distance to Phi(x/sqrt(0.75)) = " + fmt(sup) +
                               " <= 0.05 (t = " + fmt(t) + ", 1e3 exceedances)");

  // (b) product-form test at the default thresholds, c-grid and tolerance
  const auto fit = fit_location_scale(std_xy, {0.90, 0.925, 0.95, 0.975, 0.99});
  const auto tables = psi_estimates(fit, {0.5, 2.0, 4.0});
  const bool product = product_form_test(tables, 0.1);
  std::string psis;
  for (std::size_t i = 0; i < tables.c.size(); ++i) {
    psis += " psi2(" + fmt(tables.c[i]) + ")=" + fmt(tables.psi2[i]);
  }
  out.require(product, "product_form_test(tol 0.1) true;" + psis);
  return out;
}

// ---- 7. exact / analytic property suites -----------------------------------

Outcome exact_properties() {
  Outcome out;
  RngStream rng(107);

  // limit-measure homogeneity at 1e-10
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    Eigen::VectorXd dir(3);
    for (int i = 0; i < 3; ++i) dir[i] = 0.05 + rng.uniform01();
    dir /= norm_of(dir, Norm::L1);
    const LimitMeasureSpec m(0.5 + 2.0 * rng.uniform01(),
                             DiscreteAngularMeasure({{dir, 1.0 + rng.uniform01()}}, Norm::L1));
    Eigen::VectorXd x(3);
    for (int i = 0; i < 3; ++i) x[i] = 0.1 + 2.0 * rng.uniform01();
    const double t = 0.2 + 3.0 * rng.uniform01();
    const double h = std::pow(t, -m.alpha());
    worst = std::max(worst, std::fabs(nu_open_box(m, t * x) - h * nu_open_box(m, x)) /
                                (h * nu_open_box(m, x) + 1e-300));
    worst = std::max(worst, std::fabs(nu_complement_box(m, t * x) - h * nu_complement_box(m, x)) /
                                (h * nu_complement_box(m, x)));
  }
  out.require(worst < 1e-10, "homogeneity rel err = " + fmt(worst) + " < 1e-10");

  // polar round trips
  worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    Eigen::VectorXd x(4);
    for (int i = 0; i < 4; ++i) x[i] = rng.uniform01() * 10.0 + 1e-3;
    for (const Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
      const Eigen::VectorXd back = polar_inverse(polar_transform(x, norm));
      worst = std::max(worst, (back - x).lpNorm<Eigen::Infinity>() / x.lpNorm<Eigen::Infinity>());
    }
  }
  out.require(worst < 1e-10, "polar round-trip rel err = " + fmt(worst) + " < 1e-10");

  // Hill scale invariance
  Eigen::VectorXd sample(2000);
  for (Eigen::Index i = 0; i < sample.size(); ++i) sample[i] = pareto_sample(1.0, rng);
  const double base = hill(sample, 200).alpha_hat;
  const double pow2 = hill(sample * 0x1.0p18, 200).alpha_hat;
  const double arb = hill(sample * 3.1415, 200).alpha_hat;
  out.require(pow2 == base && std::fabs(arb - base) < 1e-10 * base,
              "Hill scale invariance (exact for 2^k, " + fmt(std::fabs(arb - base) / base) +
                  " rel for arbitrary)");

  // psi round trips across the rho grid
  worst = 0.0;
  for (const double rho : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
    for (double x = 0.25; x <= 4.0; x += 0.125) {
      const double y = psi(x, PsiParams{rho, 1.0});
      worst = std::max(worst, std::fabs(psi_inverse(y, rho) - x) / x);
    }
  }
  out.require(worst < 1e-10, "psi round-trip rel err = " + fmt(worst) + " < 1e-10");

  // two-tail p + q = 1 exactly
  bool pq_exact = true;
  for (int rep = 0; rep < 500; ++rep) {
    const TwoTailSpec spec(rng.uniform01() * 5, rng.uniform01() * 5, 0.5 + rng.uniform01());
    const auto [p, q] = two_tail_pq(spec);
    pq_exact = pq_exact && (p + q == 1.0);
  }
  out.require(pq_exact, "two_tail p + q == 1 exactly");

  // gaussian oracle: normalization and exact product factorization
  const GaussianCondOracle oracle{0.6};
  bool product_exact =
      gaussian_oracle_mu(oracle, std::numeric_limits<double>::infinity(), 1.0) == 1.0;
  for (double x = -2.0; x <= 2.0; x += 0.25) {
    for (const double y : {0.5, 1.0, 3.0}) {
      product_exact =
          product_exact && gaussian_oracle_mu(oracle, x, y) == gaussian_oracle_mu(oracle, x, 1.0) / y;
    }
  }
  out.require(product_exact, "gaussian oracle normalization and product factorization exact");

  // Pareto norming identity, exact in t
  worst = 0.0;
  for (const double alpha : {0.5, 1.0, 2.0}) {
    const TailSpec tail{ParetoTail{alpha}};
    const double target0 = (std::pow(1.5, 1.0 / alpha) - 1.0) / (std::exp(1.0 / alpha) - 1.0);
    for (const double t : {3.0, 100.0, 1e5}) {
      const auto [a, b] = norming_from_tail(tail, t);
      const double ratio = (quantile_b(tail, 1.5 * t) - b) / a;
      worst = std::max(worst, std::fabs(ratio - target0) / target0);
    }
  }
  out.require(worst < 1e-10, "Pareto norming t-independence rel err = " + fmt(worst) + " < 1e-10");

  // max-stability identity
  const LimitMeasureSpec nu(
      1.0, DiscreteAngularMeasure({{Eigen::Vector2d{1, 0}, 1.0}, {Eigen::Vector2d{0, 1}, 1.0}},
                                  Norm::L1));
  worst = 0.0;
  for (const double m : {2.0, 16.0, 256.0}) {
    for (double x = 0.5; x <= 2.0; x += 0.25) {
      const Eigen::Vector2d corner{x, 1.3 * x};
      const double lhs = std::pow(max_stable_cdf(nu, corner), m);
      const double rhs = max_stable_cdf(nu, corner / m);
      worst = std::max(worst, std::fabs(lhs - rhs) / rhs);
    }
  }
  out.require(worst < 1e-10, "max-stability identity rel err = " + fmt(worst) + " < 1e-10");
  return out;
}

// ---- 8. tail dependence and asymptotic independence ------------------------

Outcome tail_dependence() {
  Outcome out;
  const Eigen::Index n = 10000000;

  RngStream rng1(108);
  const Eigen::MatrixXd invu = draw_matrix(
      n, [](RngStream& r) -> Eigen::VectorXd { return inv_uniform_pair(r); }, rng1);
  const double lam_invu = lambda_hat(invu, 0.999);
  out.require(lam_invu < 0.05, "inv-uniform lambda_hat(0.999) = " + fmt(lam_invu) + " < 0.05");

  RngStream rng2(109);
  const Eigen::MatrixXd copula = draw_matrix(
      n, [](RngStream& r) -> Eigen::VectorXd { return gaussian_copula_pair(0.9, r); }, rng2);
  const double lam_copula = lambda_hat(copula, 0.999);
  out.require(lam_copula < 0.05,
              "gaussian-copula(rho=0.9) lambda_hat(0.999) = " + fmt(lam_copula) + " < 0.05");

  RngStream rng3(110);
  Eigen::MatrixXd dependent(100000, 2);
  for (Eigen::Index i = 0; i < dependent.rows(); ++i) {
    dependent(i, 0) = dependent(i, 1) = pareto_sample(1.0, rng3);
  }
  const double lam_dep = lambda_hat(dependent, 0.999);
  out.require(lam_dep == 1.0, "lambda_hat on (W, W) = " + fmt(lam_dep) + " == 1 exactly");
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = untimed
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hidden-regular-variation indices (iid Pareto pair)", 5.0, hidden_indices},
      {2, "hidden limit-measure Monte Carlo oracle", 30.0, hidden_limit_measure},
      {3, "spectral recovery from polar-construction samples", 20.0, spectral_recovery},
      {4, "decoupage split and POT exceedance law", 0.0, decoupage},
      {5, "block maxima vs the max-stable limit", 60.0, max_stable_limit},
      {6, "conditioned limit (bivariate normal, rho = 0.5)", 90.0, conditioned_limit},
      {7, "exact/analytic property suites at 1e-10", 0.0, exact_properties},
      {8, "tail dependence and asymptotic independence", 0.0, tail_dependence},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      outcome.pass = false;
      outcome.detail += "; FAILED: runtime " + fmt(elapsed) + "s over budget " +
                        fmt(criterion.budget_seconds) + "s";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.1fs) — %s\n", outcome.pass ? "PASS" : "FAIL",
                criterion.id, criterion.name, elapsed, outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  } else {
    std::printf("all %zu criteria passed\n", criteria.size());
  }
  return failures;
}
