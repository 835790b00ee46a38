#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riglab::theory {

/// Tabulated closed-form function, x strictly increasing.
struct TheoryCurve {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// P(i ~ j) in a random interval graph: exactly 2/3.
double edge_probability();

/// E|E| = n(n-1)/3.
double expected_edges(int n);

/// Leading coefficient of Var|E| / n^3, i.e. 2/45.
double edge_variance_coefficient();

/// Exact Var|E| = C(n,2) * 2/9 + n(n-1)(n-2) * 2/45.
double edge_count_variance(int n);

/// P(rho^2 <= y) for the radius of a random interval.
///   y <= 1/2 : y pi / 2
///   y >  1/2 : y (pi/2 - 2 acos(1/sqrt(2y))) + sqrt(2y - 1)
/// rho^2 never exceeds 1, so the CDF is 1 for y >= 1. y < 0 is a DomainError.
double radius_sq_cdf(double y);

/// lim P(d(v) <= x n) = 1 - radius_sq_cdf(1 - x), for x in [0, 1].
double degree_cdf_limit(double x);

/// Mean of the limiting degree law of d(v)/n (= 2/3).
double degree_limit_mean();

/// lim P(delta < k sqrt(n)) = 1 - exp(-k^2 / 2), k >= 0.
double min_degree_cdf_limit(double k);

/// Mean of the limiting law of delta / sqrt(n) (Rayleigh: sqrt(pi/2)).
double min_degree_limit_mean();

/// lim alpha / sqrt(n) = 2 / sqrt(pi).
double independence_constant();

/// P(i ~ j) = 1 / (1 + r)^2 in the one-dimensional dot-product graph.
double dot_edge_probability(double r);

/// P(a ~ c | a ~ b, b ~ c) = ((1 + r) / (1 + 2r))^2 in the same model.
double dot_conditional_edge_probability(double r);

/// n (2x - 2x^2): expected number of intervals covering x.
double expected_point_cover(int n, double x);

/// Names accepted by tabulate.
const std::vector<std::string_view>& curve_names();

/// Evenly spaced tabulation on the curve's natural domain
/// (degree-cdf and radius-cdf on [0,1], min-degree-cdf on [0,6]).
TheoryCurve tabulate(std::string_view name, int points);

/// Evaluates a named curve at x.
double evaluate_curve(std::string_view name, double x);

}  // namespace riglab::theory
