#include <doctest.h>

#include <cmath>

#include "heavytail/error.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/rng.hpp"
#include "heavytail/samplers.hpp"
#include "test_support.hpp"

using namespace heavytail;

namespace {

Eigen::MatrixXd pareto_pairs(Eigen::Index n, std::uint64_t seed) {
  RngStream rng(seed);
  return draw_matrix(n, [](RngStream& r) -> Eigen::VectorXd { return iid_pareto_pair(r); }, rng);
}

}  // namespace

TEST_CASE("hill on the geometric ladder is exact") {
  // X_(i) = e^(n-i+1): mean log-spacing (k+1)/2, alpha_hat = 2/(k+1).
  const int n = 40;
  Eigen::VectorXd sample(n);
  for (int i = 0; i < n; ++i) sample[i] = std::exp(static_cast<double>(i + 1));
  for (const Eigen::Index k : {1, 5, 10, 20}) {
    const auto est = hill(sample, k);
    CHECK(est.alpha_hat ==
          doctest::Approx(2.0 / static_cast<double>(k + 1)).epsilon(1e-12));
    CHECK(est.k == k);
    CHECK(est.n == n);
  }
}

TEST_CASE("hill is consistent on Pareto samples") {
  RngStream rng(808);
  Eigen::VectorXd sample(100000);
  for (Eigen::Index i = 0; i < sample.size(); ++i) sample[i] = pareto_sample(1.0, rng);
  CHECK(hill(sample, 1000).alpha_hat == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("hill error paths") {
  Eigen::VectorXd constant = Eigen::VectorXd::Constant(50, 3.0);
  CHECK_THROWS_AS(hill(constant, 10), Error);

  Eigen::VectorXd ok = Eigen::VectorXd::LinSpaced(50, 1.0, 50.0);
  CHECK_THROWS_AS(hill(ok, 0), Error);
  CHECK_THROWS_AS(hill(ok, 50), Error);

  Eigen::VectorXd negative = Eigen::VectorXd::LinSpaced(50, -10.0, 2.0);
  CHECK_THROWS_AS(hill(negative, 45), Error);
}

TEST_CASE("hill is exactly scale invariant") {
  RngStream rng(809);
  Eigen::VectorXd sample(5000);
  for (Eigen::Index i = 0; i < sample.size(); ++i) sample[i] = pareto_sample(0.8, rng);
  const double base = hill(sample, 500).alpha_hat;
  // powers of two rescale the doubles exactly
  CHECK(hill(sample * 1024.0, 500).alpha_hat == base);
  CHECK(hill(sample * 0x1.0p-20, 500).alpha_hat == base);
  // arbitrary scales agree to rounding
  CHECK(hill(sample * 3.7, 500).alpha_hat == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("max and min tail indices on the iid Pareto pair") {
  const Eigen::MatrixXd sample = pareto_pairs(100000, 810);
  CHECK(max_tail_index(sample, 1000).alpha_hat == doctest::Approx(1.0).epsilon(0.1));
  // the hidden index: P[min > x] = x^-2 exactly
  CHECK(min_tail_index(sample, 1000).alpha_hat == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("fully dependent pairs collapse max and min to the marginal") {
  RngStream rng(811);
  Eigen::MatrixXd sample(20000, 2);
  Eigen::VectorXd w(20000);
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = pareto_sample(1.0, rng);
  sample.col(0) = w;
  sample.col(1) = w;
  const auto marginal = hill(w, 500);
  CHECK(max_tail_index(sample, 500).alpha_hat == marginal.alpha_hat);
  CHECK(min_tail_index(sample, 500).alpha_hat == marginal.alpha_hat);
}

TEST_CASE("min tail of the line construction is the radius index") {
  const LineConstructionSpec spec{TailSpec{ParetoTail{0.5}}};
  RngStream rng(812);
  const Eigen::MatrixXd sample = draw_matrix(
      200000, [&](RngStream& r) -> Eigen::VectorXd { return line_construction_sample(spec, r); },
      rng);
  // min(Z) = R which is exactly Pareto(1)
  CHECK(min_tail_index(sample, 2000).alpha_hat == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("linear combination tails") {
  const Eigen::MatrixXd sample = pareto_pairs(100000, 813);

  // s = e1 reduces to the marginal Hill estimate
  const auto e1 = linear_combination_tail(sample, Eigen::Vector2d{1, 0}, LinearMode::MaxLinear, 1000);
  CHECK(e1.alpha_hat == hill(sample.col(0), 1000).alpha_hat);

  CHECK(linear_combination_tail(sample, Eigen::Vector2d{1, 1}, LinearMode::MaxLinear, 1000).alpha_hat ==
        doctest::Approx(1.0).epsilon(0.1));
  CHECK(linear_combination_tail(sample, Eigen::Vector2d{1, 1}, LinearMode::MinLinear, 1000).alpha_hat ==
        doctest::Approx(2.0).epsilon(0.12));

  CHECK_THROWS_AS(
      linear_combination_tail(sample, Eigen::Vector2d{0, 0}, LinearMode::MaxLinear, 1000), Error);
  CHECK_THROWS_AS(
      linear_combination_tail(sample, Eigen::Vector2d{-1, 1}, LinearMode::MaxLinear, 1000), Error);
  CHECK_THROWS_AS(
      linear_combination_tail(sample, Eigen::Vector2d{0, 1}, LinearMode::MinLinear, 1000), Error);
}

TEST_CASE("angular estimate recovers a two-atom spectral measure") {
  const PolarConstructionSpec spec{
      1.0, DiscreteAngularMeasure({{Eigen::Vector2d{1, 0}, 0.5}, {Eigen::Vector2d{0, 1}, 0.5}},
                                  Norm::L1)};
  RngStream rng(814);
  const Eigen::MatrixXd sample = draw_matrix(
      200000, [&](RngStream& r) -> Eigen::VectorXd { return polar_construction_sample(spec, r); },
      rng);
  const auto est = angular_estimate(sample, 0.01, Norm::L1);
  REQUIRE(est.angular.atoms().size() == 2);  // exact directions merge
  CHECK(est.angular.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& atom : est.angular.atoms()) {
    CHECK(atom.weight == doctest::Approx(0.5).epsilon(0.15));
  }
  CHECK(est.index.alpha_hat == doctest::Approx(1.0).epsilon(0.1));
  CHECK(est.threshold_radius > 1.0);
}

TEST_CASE("angular estimate on one ray is a single atom of mass 1") {
  RngStream rng(815);
  Eigen::MatrixXd sample(10000, 2);
  for (Eigen::Index i = 0; i < sample.rows(); ++i) {
    sample.row(i) = Eigen::RowVector2d{0.4, 0.6} * pareto_sample(1.0, rng);
  }
  const auto est = angular_estimate(sample, 0.02, Norm::L1);
  REQUIRE(est.angular.atoms().size() == 1);
  CHECK(est.angular.atoms()[0].weight == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est.angular.atoms()[0].direction[0] == doctest::Approx(0.4).epsilon(1e-9));
}

TEST_CASE("iid pair angular mass concentrates near the axes") {
  const Eigen::MatrixXd sample = pareto_pairs(200000, 816);
  const auto est = angular_estimate(sample, 0.001, Norm::LInf);
  const auto clustered = cluster_atoms(est.angular, 0.1);
  double near_axes = 0.0;
  for (const auto& atom : clustered.atoms()) {
    if (atom.direction.minCoeff() < 0.1) near_axes += atom.weight;
  }
  CHECK(near_axes > 0.9);
}

TEST_CASE("angular estimate guards its minimum sample") {
  const Eigen::MatrixXd sample = pareto_pairs(1000, 817);
  CHECK_THROWS_AS(angular_estimate(sample, 0.01, Norm::L1), Error);  // 10 points < 50
}

TEST_CASE("lambda_hat basics") {
  RngStream rng(818);
  Eigen::MatrixXd dependent(5000, 2);
  Eigen::VectorXd w(5000);
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = pareto_sample(1.0, rng);
  dependent.col(0) = w;
  dependent.col(1) = w;
  for (const double u : {0.5, 0.9, 0.99}) {
    CHECK(lambda_hat(dependent, u) == 1.0);  // exact for identical components
  }

  const Eigen::MatrixXd independent = pareto_pairs(1000000, 819);
  CHECK(lambda_hat(independent, 0.99) == doctest::Approx(0.01).epsilon(0.5));

  CHECK_THROWS_AS(lambda_hat(independent, 1.0 - 1e-9), Error);  // too few exceedances
}

TEST_CASE("lambda_hat is exactly rank invariant") {
  const Eigen::MatrixXd sample = pareto_pairs(20000, 820);
  Eigen::MatrixXd transformed(sample.rows(), 2);
  transformed.col(0) = sample.col(0).array().log();       // increasing
  transformed.col(1) = sample.col(1).array().pow(3.0);    // increasing
  for (const double u : {0.9, 0.95, 0.99}) {
    CHECK(lambda_hat(sample, u) == lambda_hat(transformed, u));
  }
}

TEST_CASE("lambda_hat is nonincreasing across u for the iid pair") {
  const Eigen::MatrixXd sample = pareto_pairs(1000000, 821);
  const double l1 = lambda_hat(sample, 0.9);
  const double l2 = lambda_hat(sample, 0.99);
  const double l3 = lambda_hat(sample, 0.999);
  const auto band = [&](double u) {
    const double p = 1.0 - u;
    return 3.0 * std::sqrt(p * (1.0 - p) / (1e6 * p));
  };
  CHECK(l2 <= l1 + band(0.9) + band(0.99));
  CHECK(l3 <= l2 + band(0.99) + band(0.999));
}

TEST_CASE("hrv report on the iid Pareto pair") {
  const Eigen::MatrixXd sample = pareto_pairs(100000, 822);
  const auto report = hrv_report(sample, 1000, 0.99);
  CHECK(report.eta_hat == doctest::Approx(0.5).epsilon(0.15));
  CHECK(report.eta_hat == report.alpha.alpha_hat / report.alpha0.alpha_hat);  // exact identity
  CHECK(report.verdict == HrvVerdict::HrvConsistent);
}

TEST_CASE("hrv report on the mixture example") {
  const auto spec = MixtureHrvSpec::with_default_direction(1.5);
  RngStream rng(823);
  const Eigen::MatrixXd sample = draw_matrix(
      4000000, [&](RngStream& r) -> Eigen::VectorXd { return mixture_hrv_sample(spec, r); }, rng);
  // The interior mass makes lambda(u) decay like sqrt(1-u): about 0.12 at
  // u = 0.99 and 0.03 at u = 0.9995, so the verdict needs the higher level
  // to clear the default tolerance.
  const auto report = hrv_report(sample, default_k(sample.rows()), 0.9995);
  CHECK(report.alpha0.alpha_hat == doctest::Approx(1.5).epsilon(0.1));
  CHECK(report.eta_hat == doctest::Approx(2.0 / 3.0).epsilon(0.15));
  CHECK(report.verdict == HrvVerdict::HrvConsistent);

  const auto low = hrv_report(sample, default_k(sample.rows()), 0.99);
  CHECK(low.lambda == doctest::Approx(0.12).epsilon(0.35));
  CHECK(low.verdict == HrvVerdict::Inconclusive);
}

TEST_CASE("hrv report on fully dependent components is no-HRV") {
  RngStream rng(824);
  Eigen::MatrixXd sample(50000, 2);
  Eigen::VectorXd w(50000);
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = pareto_sample(1.0, rng);
  sample.col(0) = w;
  sample.col(1) = w;
  const auto report = hrv_report(sample, 1000, 0.99);
  CHECK(report.alpha.alpha_hat == doctest::Approx(report.alpha0.alpha_hat).epsilon(1e-12));
  CHECK(report.lambda == 1.0);
  CHECK(report.verdict == HrvVerdict::NoHrv);
}

TEST_CASE("angular finiteness predicate") {
  CHECK(angular_finiteness_predicate(ParetoTail{2.0}) == AngularMass::Finite);
  CHECK(angular_finiteness_predicate(ParetoTail{0.5}) == AngularMass::Infinite);
  CHECK(angular_finiteness_predicate(ParetoTail{1.0}) == AngularMass::Infinite);
  CHECK_THROWS_AS(angular_finiteness_predicate(EmpiricalTail::of({2, 3, 4})), Error);
}

TEST_CASE("default k grows like n^(2/3)") {
  CHECK(default_k(1000) == 100);
  CHECK(default_k(100000) == static_cast<Eigen::Index>(std::ceil(std::pow(1e5, 2.0 / 3.0))));
}
