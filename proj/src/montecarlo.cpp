#include "riglab/montecarlo.hpp"

#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "riglab/core.hpp"

namespace riglab::mc {

double z_for_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0, 1)");
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 1.0 - (1.0 - level) / 2.0);
}

namespace {

std::pair<double, double> wilson_bounds(std::int64_t successes, std::int64_t trials, double z) {
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {std::min(lo, p), std::max(hi, p)};
}

}  // namespace

EstimateWithCI estimate_proportion(std::int64_t successes, std::int64_t trials, double level) {
  if (trials <= 0) throw DomainError("estimate_proportion: trials must be positive");
  if (successes < 0 || successes > trials) {
    throw DomainError("estimate_proportion: successes must lie in [0, trials]");
  }
  const auto [lo, hi] = wilson_bounds(successes, trials, z_for_level(level));
  return {static_cast<double>(successes) / static_cast<double>(trials), lo, hi, level, trials};
}

EstimateWithCI estimate_difference(std::int64_t successes1, std::int64_t trials1,
                                   std::int64_t successes0, std::int64_t trials0, double level) {
  const auto e1 = estimate_proportion(successes1, trials1, level);
  const auto e0 = estimate_proportion(successes0, trials0, level);
  const double d = e1.point - e0.point;
  const double lo = d - std::hypot(e1.point - e1.ci_low, e0.ci_high - e0.point);
  const double hi = d + std::hypot(e1.ci_high - e1.point, e0.point - e0.ci_low);
  return {d, lo, hi, level, std::min(trials1, trials0)};
}

Moments sample_moments(std::span<const double> values) {
  Moments m;
  m.count = static_cast<std::int64_t>(values.size());
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.variance = ss / static_cast<double>(values.size() - 1);
  }
  return m;
}

EstimateWithCI estimate_mean(std::span<const double> values, double level) {
  if (values.empty()) throw DomainError("estimate_mean: no values");
  const auto m = sample_moments(values);
  const double se = std::sqrt(m.variance / static_cast<double>(m.count));
  const double half = z_for_level(level) * se;
  return {m.mean, m.mean - half, m.mean + half, level, m.count};
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values)) {
  if (sorted_.empty()) throw DomainError("EmpiricalCdf: no values");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto k = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
  return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const {
  const auto k = std::lower_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
  return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

double ks_distance(const EmpiricalCdf& ecdf, const std::function<double(double)>& theory,
                   int grid, std::pair<double, double> domain) {
  const auto values = ecdf.sorted_values();
  const double size = static_cast<double>(values.size());
  double worst = 0.0;
  // Walk distinct sample values; at each jump compare both one-sided limits.
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double f = theory(values[i]);
    worst = std::max(worst, std::abs(static_cast<double>(i) / size - f));
    worst = std::max(worst, std::abs(static_cast<double>(j) / size - f));
    i = j;
  }
  if (grid >= 2) {
    const auto [lo, hi] = domain;
    for (int g = 0; g < grid; ++g) {
      const double x = g == grid - 1 ? hi : lo + (hi - lo) * g / (grid - 1);
      worst = std::max(worst, std::abs(ecdf(x) - theory(x)));
    }
  }
  return worst;
}

double ks_distance(const EmpiricalCdf& ecdf, const std::function<double(double)>& theory,
                   int grid) {
  const auto values = ecdf.sorted_values();
  return ks_distance(ecdf, theory, grid, {values.front(), values.back()});
}

}  // namespace riglab::mc
