#include "heavytail/tails.hpp"

#include <algorithm>
#include <cmath>

#include "heavytail/error.hpp"

namespace heavytail {

namespace {

void check_pareto(const ParetoTail& p) {
  if (!(p.alpha > 0.0)) fail(Error::Code::InvalidSpec, "ParetoTail requires alpha > 0");
}

void check_exponential(const ExponentialTail& e) {
  if (!(e.rate > 0.0)) fail(Error::Code::InvalidSpec, "ExponentialTail requires rate > 0");
}

void check_empirical(const EmpiricalTail& e) {
  if (e.sorted.empty()) fail(Error::Code::InvalidSpec, "EmpiricalTail requires a nonempty sample");
}

}  // namespace

EmpiricalTail EmpiricalTail::of(std::vector<double> sample) {
  if (sample.empty()) fail(Error::Code::InvalidSpec, "EmpiricalTail requires a nonempty sample");
  for (double v : sample) {
    if (!std::isfinite(v)) fail(Error::Code::NonFinite, "EmpiricalTail sample must be finite");
  }
  std::sort(sample.begin(), sample.end());
  return EmpiricalTail{std::move(sample)};
}

double survival(const TailSpec& tail, double x) {
  return std::visit(
      [x](const auto& t) -> double {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ParetoTail>) {
          check_pareto(t);
          return x <= 1.0 ? 1.0 : std::pow(x, -t.alpha);
        } else if constexpr (std::is_same_v<T, ExponentialTail>) {
          check_exponential(t);
          return x <= 0.0 ? 1.0 : std::exp(-t.rate * x);
        } else if constexpr (std::is_same_v<T, UniformTail>) {
          if (x <= 0.0) return 1.0;
          return x >= 1.0 ? 0.0 : 1.0 - x;
        } else {
          check_empirical(t);
          const auto& s = t.sorted;
          const auto it = std::upper_bound(s.begin(), s.end(), x);
          return static_cast<double>(s.end() - it) / static_cast<double>(s.size());
        }
      },
      tail);
}

double quantile_b(const TailSpec& tail, double t) {
  if (!(t > 1.0)) fail(Error::Code::OutOfRange, "quantile_b requires t > 1");
  return std::visit(
      [t](const auto& spec) -> double {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ParetoTail>) {
          check_pareto(spec);
          return std::pow(t, 1.0 / spec.alpha);
        } else if constexpr (std::is_same_v<T, ExponentialTail>) {
          check_exponential(spec);
          return std::log(t) / spec.rate;
        } else if constexpr (std::is_same_v<T, UniformTail>) {
          return 1.0 - 1.0 / t;
        } else {
          check_empirical(spec);
          const auto n = static_cast<double>(spec.sorted.size());
          if (t > n) {
            fail(Error::Code::OutOfRange, "quantile_b: t exceeds empirical resolution (t > n)");
          }
          const auto rank = static_cast<std::size_t>(std::ceil(n / t));  // k-th largest
          return spec.sorted[spec.sorted.size() - rank];
        }
      },
      tail);
}

double sample_from(const TailSpec& tail, RngStream& rng) {
  const double u = rng.uniform01();
  return std::visit(
      [u](const auto& spec) -> double {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ParetoTail>) {
          check_pareto(spec);
          return std::pow(u, -1.0 / spec.alpha);
        } else if constexpr (std::is_same_v<T, ExponentialTail>) {
          check_exponential(spec);
          return -std::log(u) / spec.rate;
        } else if constexpr (std::is_same_v<T, UniformTail>) {
          return 1.0 - u;
        } else {
          check_empirical(spec);
          if (u == 1.0) return spec.sorted.front();
          return quantile_b(TailSpec{spec}, 1.0 / u);
        }
      },
      tail);
}

bool has_finite_mean(const TailSpec& tail) {
  return std::visit(
      [](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ParetoTail>) {
          check_pareto(spec);
          return spec.alpha > 1.0;
        } else if constexpr (std::is_same_v<T, ExponentialTail>) {
          check_exponential(spec);
          return true;
        } else if constexpr (std::is_same_v<T, UniformTail>) {
          return true;
        } else {
          fail(Error::Code::Unsupported,
               "finiteness of the survival integral is not determinable from an empirical tail");
        }
      },
      tail);
}

}  // namespace heavytail
