#include "riglab/theory.hpp"

#include <cmath>
#include <numbers>

#include "riglab/core.hpp"

namespace riglab::theory {

using std::numbers::pi;

double edge_probability() { return 2.0 / 3.0; }

double expected_edges(int n) {
  if (n < 1) throw DomainError("expected_edges: n must be >= 1");
  const double nd = n;
  return nd * (nd - 1.0) / 3.0;
}

double edge_variance_coefficient() { return 2.0 / 45.0; }

double edge_count_variance(int n) {
  if (n < 1) throw DomainError("edge_count_variance: n must be >= 1");
  const double nd = n;
  return nd * (nd - 1.0) / 2.0 * (2.0 / 9.0) + nd * (nd - 1.0) * (nd - 2.0) * (2.0 / 45.0);
}

double radius_sq_cdf(double y) {
  if (!(y >= 0.0)) throw DomainError("radius_sq_cdf: y must be >= 0");
  if (y <= 0.5) return y * pi / 2.0;
  if (y >= 1.0) return 1.0;
  // acos(1 / sqrt(2y)) written as atan(sqrt(2y - 1)), which stays accurate
  // next to y = 1/2.
  const double s = std::sqrt(2.0 * y - 1.0);
  return y * (pi / 2.0 - 2.0 * std::atan(s)) + s;
}

double degree_cdf_limit(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("degree_cdf_limit: x must lie in [0, 1]");
  if (x >= 0.5) return 1.0 - (1.0 - x) * pi / 2.0;
  const double s = std::sqrt(1.0 - 2.0 * x);
  return 1.0 - (1.0 - x) * (pi / 2.0 - 2.0 * std::atan(s)) - s;
}

double degree_limit_mean() { return 2.0 / 3.0; }

double min_degree_cdf_limit(double k) {
  if (!(k >= 0.0)) throw DomainError("min_degree_cdf_limit: k must be >= 0");
  return -std::expm1(-k * k / 2.0);
}

double min_degree_limit_mean() { return std::sqrt(pi / 2.0); }

double independence_constant() { return 2.0 / std::sqrt(pi); }

double dot_edge_probability(double r) {
  if (!(r >= 0.0)) throw DomainError("dot_edge_probability: r must be >= 0");
  return 1.0 / ((1.0 + r) * (1.0 + r));
}

double dot_conditional_edge_probability(double r) {
  if (!(r >= 0.0)) throw DomainError("dot_conditional_edge_probability: r must be >= 0");
  const double ratio = (1.0 + r) / (1.0 + 2.0 * r);
  return ratio * ratio;
}

double expected_point_cover(int n, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("expected_point_cover: x must lie in [0, 1]");
  return n * (2.0 * x - 2.0 * x * x);
}

const std::vector<std::string_view>& curve_names() {
  static const std::vector<std::string_view> names{"degree-cdf", "radius-cdf", "min-degree-cdf"};
  return names;
}

namespace {

std::pair<double, double> domain_of(std::string_view name) {
  if (name == "degree-cdf" || name == "radius-cdf") return {0.0, 1.0};
  if (name == "min-degree-cdf") return {0.0, 6.0};
  throw DomainError("unknown curve '" + std::string(name) + "'");
}

}  // namespace

double evaluate_curve(std::string_view name, double x) {
  if (name == "degree-cdf") return degree_cdf_limit(x);
  if (name == "radius-cdf") return radius_sq_cdf(x);
  if (name == "min-degree-cdf") return min_degree_cdf_limit(x);
  throw DomainError("unknown curve '" + std::string(name) + "'");
}

TheoryCurve tabulate(std::string_view name, int points) {
  const auto [lo, hi] = domain_of(name);
  if (points < 2) throw DomainError("tabulate: at least 2 points are required");
  TheoryCurve curve{std::string(name), {}};
  curve.points.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
    curve.points.emplace_back(x, evaluate_curve(name, x));
  }
  return curve;
}

}  // namespace riglab::theory
