#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "riglab/oracle.hpp"
#include "riglab/rng.hpp"
#include "riglab/theory.hpp"

using namespace riglab;
using std::numbers::pi;

namespace {

// Monte Carlo estimate of P(lo^2 + (1 - hi)^2 <= y) for a uniform random
// interval, drawing the endpoints directly.
double radius_sq_frequency(double y, int samples, std::uint64_t master) {
  Rng rng(RngSeed{master, 0});
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    const double u = rng.uniform01();
    const double v = rng.uniform01();
    const double lo = std::min(u, v);
    const double hi = std::max(u, v);
    if (lo * lo + (1 - hi) * (1 - hi) <= y) ++hits;
  }
  return static_cast<double>(hits) / samples;
}

// Midpoint rule on [0,1]^d.
double integrate_cube(int dim, int cells, const std::function<double(const double*)>& f) {
  double x[3];
  double total = 0;
  const double h = 1.0 / cells;
  std::int64_t count = 1;
  for (int d = 0; d < dim; ++d) count *= cells;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t rest = idx;
    for (int d = 0; d < dim; ++d) {
      x[d] = (static_cast<double>(rest % cells) + 0.5) * h;
      rest /= cells;
    }
    total += f(x);
  }
  return total / static_cast<double>(count);
}

double integrate_line(double lo, double hi, int cells, const std::function<double(double)>& f) {
  const double h = (hi - lo) / cells;
  double total = 0;
  for (int i = 0; i < cells; ++i) total += f(lo + (i + 0.5) * h);
  return total * h;
}

}  // namespace

TEST_CASE("edge probability and expected edges") {
  CHECK(theory::edge_probability() == 2.0 / 3.0);
  CHECK(theory::expected_edges(1) == 0.0);
  CHECK(theory::expected_edges(4) == doctest::Approx(4.0));
  CHECK(theory::expected_edges(1000) == doctest::Approx(333000.0));
  for (int n = 1; n < 50; ++n) {
    CHECK(theory::expected_edges(n) ==
          doctest::Approx(n * (n - 1) / 2.0 * theory::edge_probability()));
  }
  CHECK_THROWS_AS(theory::expected_edges(0), DomainError);
}

TEST_CASE("edge-count variance matches exact enumeration") {
  CHECK(theory::edge_count_variance(3) == doctest::Approx(14.0 / 15.0));
  CHECK(theory::edge_variance_coefficient() == doctest::Approx(2.0 / 45.0));
  for (int n = 2; n <= 6; ++n) {
    const double exact = oracle::exact_edge_count_distribution(n).variance().convert_to<double>();
    CHECK(theory::edge_count_variance(n) == doctest::Approx(exact).epsilon(1e-12));
  }
  const double n = 1e5;
  CHECK(theory::edge_count_variance(100000) / (n * n * n) ==
        doctest::Approx(2.0 / 45.0).epsilon(1e-4));
}

TEST_CASE("radius-squared law") {
  CHECK(theory::radius_sq_cdf(0.0) == 0.0);
  CHECK(theory::radius_sq_cdf(0.5) == doctest::Approx(pi / 4));
  CHECK(theory::radius_sq_cdf(1.0) == doctest::Approx(1.0));
  CHECK(theory::radius_sq_cdf(0.25) == doctest::Approx(pi / 8));
  CHECK(theory::radius_sq_cdf(1.7) == 1.0);
  CHECK_THROWS_AS(theory::radius_sq_cdf(-0.1), DomainError);

  SUBCASE("branches meet at one half") {
    const double y = 0.5;
    const double upper = y * (pi / 2 - 2 * std::acos(1 / std::sqrt(2 * y))) + std::sqrt(2 * y - 1);
    CHECK(std::abs(upper - y * pi / 2) < 1e-12);
    CHECK(std::abs(theory::radius_sq_cdf(0.5 + 1e-13) - theory::radius_sq_cdf(0.5)) < 1e-12);
  }
  SUBCASE("nondecreasing") {
    double prev = 0;
    for (int i = 0; i <= 10'000; ++i) {
      const double f = theory::radius_sq_cdf(i / 10'000.0);
      REQUIRE(f >= prev);
      REQUIRE(f <= 1.0);
      prev = f;
    }
  }
  SUBCASE("agrees with sampled intervals") {
    for (double y : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
      CHECK(std::abs(radius_sq_frequency(y, 1'000'000, 17) - theory::radius_sq_cdf(y)) < 0.003);
    }
  }
}

TEST_CASE("degree law") {
  CHECK(theory::degree_cdf_limit(1.0) == 1.0);
  CHECK(std::abs(theory::degree_cdf_limit(0.0)) < 1e-15);
  CHECK(theory::degree_cdf_limit(0.5) == doctest::Approx(1 - pi / 4));
  CHECK(theory::degree_cdf_limit(0.25) == doctest::Approx(0.03801).epsilon(1e-4));
  CHECK_THROWS_AS(theory::degree_cdf_limit(-0.01), DomainError);
  CHECK_THROWS_AS(theory::degree_cdf_limit(1.01), DomainError);

  double prev = 0;
  for (int i = 0; i <= 10'000; ++i) {
    const double x = i / 10'000.0;
    const double f = theory::degree_cdf_limit(x);
    REQUIRE(std::abs(f + theory::radius_sq_cdf(1 - x) - 1) < 1e-12);
    REQUIRE(f >= prev - 1e-15);
    prev = f;
  }
  CHECK(std::abs(theory::degree_cdf_limit(0.5 - 1e-13) - theory::degree_cdf_limit(0.5)) < 1e-12);
  CHECK(std::abs(1 - radius_sq_frequency(0.75, 1'000'000, 18) - theory::degree_cdf_limit(0.25)) <
        0.003);

  const double mean = integrate_line(0, 1, 200'000, [](double x) {
    return 1 - theory::degree_cdf_limit(x);
  });
  CHECK(theory::degree_limit_mean() == doctest::Approx(mean).epsilon(1e-6));
  CHECK(theory::degree_limit_mean() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("minimum-degree law") {
  CHECK(theory::min_degree_cdf_limit(0.0) == 0.0);
  CHECK(theory::min_degree_cdf_limit(1.0) == doctest::Approx(0.39347).epsilon(1e-5));
  CHECK(theory::min_degree_cdf_limit(6.0) > 0.9999);
  CHECK_THROWS_AS(theory::min_degree_cdf_limit(-1.0), DomainError);
  double prev = 0;
  for (int i = 0; i <= 6000; ++i) {
    const double f = theory::min_degree_cdf_limit(i / 1000.0);
    REQUIRE(f >= prev);
    REQUIRE(f < 1.0 + 1e-15);
    prev = f;
  }
  const double mean = integrate_line(0, 12, 200'000, [](double k) {
    return 1 - theory::min_degree_cdf_limit(k);
  });
  CHECK(theory::min_degree_limit_mean() == doctest::Approx(mean).epsilon(1e-6));
}

TEST_CASE("independence constant") {
  CHECK(theory::independence_constant() == doctest::Approx(1.128379).epsilon(1e-6));
  CHECK(theory::independence_constant() == doctest::Approx(1 / std::tgamma(1.5)).epsilon(1e-14));
  CHECK(theory::independence_constant() > 1.0);
  CHECK(theory::independence_constant() < 1.2);
}

TEST_CASE("dot-product probabilities") {
  CHECK(theory::dot_edge_probability(0.0) == 1.0);
  CHECK(theory::dot_edge_probability(1.0) == 0.25);
  CHECK_THROWS_AS(theory::dot_edge_probability(-1.0), DomainError);
  for (double r : {1.0, 2.0, 0.5}) {
    const double q = integrate_cube(2, 1000, [r](const double* x) { return std::pow(x[0] * x[1], r); });
    CHECK(theory::dot_edge_probability(r) == doctest::Approx(q).epsilon(1e-3));
  }
  SUBCASE("closing a two-path") {
    CHECK(theory::dot_conditional_edge_probability(1.0) == doctest::Approx(4.0 / 9.0));
    CHECK(theory::dot_conditional_edge_probability(0.0) == 1.0);
    for (double r : {1.0, 2.0}) {
      const auto pr = [r](double a, double b) { return std::pow(a * b, r); };
      const double paths = integrate_cube(3, 120, [&](const double* x) {
        return pr(x[0], x[1]) * pr(x[1], x[2]);
      });
      const double triangles = integrate_cube(3, 120, [&](const double* x) {
        return pr(x[0], x[1]) * pr(x[1], x[2]) * pr(x[0], x[2]);
      });
      CHECK(theory::dot_conditional_edge_probability(r) ==
            doctest::Approx(triangles / paths).epsilon(1e-3));
      CHECK(theory::dot_conditional_edge_probability(r) > theory::dot_edge_probability(r));
    }
  }
}

TEST_CASE("expected point cover") {
  CHECK(theory::expected_point_cover(1000, 0.5) == doctest::Approx(500));
  CHECK(theory::expected_point_cover(1000, 0.0) == 0.0);
  CHECK(theory::expected_point_cover(1000, 0.25) == doctest::Approx(375));
  CHECK_THROWS_AS(theory::expected_point_cover(10, 1.5), DomainError);
}

TEST_CASE("curve tabulation") {
  const auto d = theory::tabulate("degree-cdf", 3);
  REQUIRE(d.points.size() == 3);
  CHECK(d.points[0].first == 0.0);
  CHECK(std::abs(d.points[0].second) < 1e-15);
  CHECK(d.points[1].first == 0.5);
  CHECK(d.points[1].second == doctest::Approx(1 - pi / 4));
  CHECK(d.points[2] == std::pair<double, double>{1.0, 1.0});

  const auto r = theory::tabulate("radius-cdf", 2);
  CHECK(r.points[0] == std::pair<double, double>{0.0, 0.0});
  CHECK(r.points[1].first == 1.0);
  CHECK(r.points[1].second == doctest::Approx(1.0));

  const auto m = theory::tabulate("min-degree-cdf", 2);
  CHECK(m.points[0] == std::pair<double, double>{0.0, 0.0});
  CHECK(m.points[1].first == 6.0);
  CHECK(m.points[1].second == doctest::Approx(1 - std::exp(-18.0)).epsilon(1e-15));

  for (auto name : theory::curve_names()) {
    const auto c = theory::tabulate(name, 1001);
    CHECK(c.name == name);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      REQUIRE(c.points[i].first > c.points[i - 1].first);
      REQUIRE(c.points[i].second >= c.points[i - 1].second - 1e-15);
      REQUIRE(c.points[i].second <= 1.0 + 1e-15);
    }
    CHECK(theory::evaluate_curve(name, c.points[500].first) == c.points[500].second);
  }
  CHECK_THROWS_AS(theory::tabulate("nope", 10), DomainError);
  CHECK_THROWS_AS(theory::tabulate("degree-cdf", 1), DomainError);
}
