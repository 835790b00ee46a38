#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "riglab/algorithms.hpp"
#include "riglab/generators.hpp"
#include "riglab/oracle.hpp"

using namespace riglab;
using oracle::Rational;

namespace {

std::vector<std::pair<double, double>> pairs_of(const IntervalFamily& f) {
  std::vector<std::pair<double, double>> v;
  for (const auto& iv : f) v.emplace_back(iv.lo, iv.hi);
  return v;
}

// P(universal vertex) over all (2n)! orderings of the 2n endpoints, counted
// directly from positions without going through matchings.
Rational universal_by_permutations(int n) {
  std::int64_t total = 0;
  std::int64_t hits = 0;
  std::vector<int> perm(2 * static_cast<std::size_t>(n));  // label k belongs to vertex k / 2
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> lo(static_cast<std::size_t>(n), -1), hi(static_cast<std::size_t>(n));
    for (int pos = 0; pos < 2 * n; ++pos) {
      const int v = perm[static_cast<std::size_t>(pos)] / 2;
      auto& l = lo[static_cast<std::size_t>(v)];
      if (l < 0) {
        l = pos;
      } else {
        hi[static_cast<std::size_t>(v)] = pos;
      }
    }
    bool universal = false;
    for (int v = 0; v < n && !universal; ++v) {
      bool all = true;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        const auto a = static_cast<std::size_t>(v);
        const auto b = static_cast<std::size_t>(w);
        if (hi[a] < lo[b] || hi[b] < lo[a]) all = false;
      }
      universal = all;
    }
    ++total;
    hits += universal ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(hits, total);
}

int clique_by_subsets(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && !g.adjacent(i, j)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

int chromatic_by_assignments(const Graph& g) {
  const int n = g.size();
  const auto edges = g.edges();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : edges) {
        if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) proper = false;
      }
      if (proper) return k;
      int pos = 0;
      while (pos < n && ++color[static_cast<std::size_t>(pos)] == k) color[static_cast<std::size_t>(pos++)] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

Graph cycle(int n) {
  Graph::Builder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("matching counts") {
  std::uint64_t double_factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    double_factorial *= static_cast<std::uint64_t>(2 * n - 1);
    CHECK(oracle::matching_count(n) == double_factorial);
  }
  CHECK(oracle::matching_count(4) == 105);
  CHECK(oracle::matching_count(0) == 1);
}

TEST_CASE("enumeration yields every matching once") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = oracle::enumerate_matchings(n);
    REQUIRE(all.size() == oracle::matching_count(n));
    std::set<std::vector<std::pair<double, double>>> distinct;
    for (const auto& f : all) {
      std::vector<double> endpoints;
      for (const auto& iv : f) {
        endpoints.push_back(iv.lo);
        endpoints.push_back(iv.hi);
      }
      std::sort(endpoints.begin(), endpoints.end());
      for (int k = 0; k < 2 * n; ++k) REQUIRE(endpoints[static_cast<std::size_t>(k)] == k + 1);
      distinct.insert(pairs_of(f));
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK(oracle::enumerate_matchings(1).size() == 1);
  CHECK(oracle::enumerate_matchings(2).size() == 3);
}

TEST_CASE("canonical order and resumption") {
  const auto two = oracle::enumerate_matchings(2);
  using P = std::vector<std::pair<double, double>>;
  CHECK(pairs_of(two[0]) == P{{1, 2}, {3, 4}});
  CHECK(pairs_of(two[1]) == P{{1, 3}, {2, 4}});
  CHECK(pairs_of(two[2]) == P{{1, 4}, {2, 3}});

  const auto all = oracle::enumerate_matchings(4);
  for (std::uint64_t start : {0ULL, 1ULL, 17ULL, 104ULL, 105ULL}) {
    oracle::MatchingEnumerator it(4, start);
    CHECK(it.total() == 105);
    std::uint64_t k = start;
    while (auto f = it.next()) {
      REQUIRE(pairs_of(*f) == pairs_of(all[k]));
      ++k;
    }
    CHECK(k == 105);
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(oracle::enumerate_matchings(8), DomainError);
  CHECK_THROWS_AS(oracle::enumerate_matchings(0), DomainError);
  CHECK_THROWS_AS(oracle::exact_prob_universal(8), DomainError);
  CHECK_THROWS_AS(oracle::exact_edge_count_distribution(8), DomainError);
  CHECK_THROWS_AS(oracle::brute_clique(Graph(21)), DomainError);
  CHECK_THROWS_AS(oracle::brute_independence(Graph(21)), DomainError);
  CHECK_THROWS_AS(oracle::brute_chromatic(Graph(13)), DomainError);
}

TEST_CASE("universal vertex probability is exactly two thirds") {
  CHECK(oracle::exact_prob_universal(1) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(oracle::exact_prob_universal(n) == Rational(2, 3));
}

TEST_CASE("universal vertex probability agrees with endpoint orderings") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(universal_by_permutations(n) == oracle::exact_prob_universal(n));
  }
}

TEST_CASE("two-vertex case by hand") {
  // (1,2)(3,4) is the only disjoint pairing of four points.
  int intersecting = 0;
  for (const auto& f : oracle::enumerate_matchings(2)) {
    if (intervals_intersect(f[0], f[1])) ++intersecting;
  }
  CHECK(intersecting == 2);
}

TEST_CASE("edge-count distribution") {
  for (int n = 1; n <= 6; ++n) {
    const auto d = oracle::exact_edge_count_distribution(n);
    CHECK(d.total() == 1);
    CHECK(d.mean() == Rational(n * (n - 1), 3));
  }
  CHECK(oracle::exact_edge_count_distribution(2).mean() == Rational(2, 3));
  const auto three = oracle::exact_edge_count_distribution(3);
  CHECK(three.mean() == 2);
  CHECK(three.variance() == Rational(14, 15));
  CHECK(three.probability(0) == Rational(1, 15));
  CHECK(three.probability(3) == Rational(6, 15));
  CHECK(three.probability(4) == 0);
}

TEST_CASE("brute-force oracles on fixed graphs") {
  CHECK(oracle::brute_clique(Graph(4)) == 1);
  CHECK(oracle::brute_clique(Graph::complete(4)) == 4);
  CHECK(oracle::brute_clique(cycle(5)) == 2);
  CHECK(oracle::brute_clique(Graph(0)) == 0);

  const std::vector<std::pair<int, int>> star_edges{{0, 1}, {0, 2}, {0, 3}};
  CHECK(oracle::brute_independence(Graph(4)) == 4);
  CHECK(oracle::brute_independence(Graph::complete(4)) == 1);
  CHECK(oracle::brute_independence(Graph::from_edges(4, star_edges)) == 3);

  const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
  CHECK(oracle::brute_chromatic(Graph(4)) == 1);
  CHECK(oracle::brute_chromatic(Graph::complete(4)) == 4);
  CHECK(oracle::brute_chromatic(Graph::from_edges(3, path)) == 2);
  CHECK(oracle::brute_chromatic(cycle(5)) == 3);
}

TEST_CASE("brute-force oracles agree with exhaustive definitions") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    const RngSeed seed = derive_trial_seed(41, t);
    const int n = 1 + static_cast<int>(Rng(seed).uniform_below(8));
    const double p = (t % 5) / 4.0;
    const Graph g = gen_gnp(n, p, seed);
    REQUIRE(oracle::brute_clique(g) == clique_by_subsets(g));
    std::vector<std::pair<int, int>> missing;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.adjacent(i, j)) missing.emplace_back(i, j);
    REQUIRE(oracle::brute_independence(g) == clique_by_subsets(Graph::from_edges(n, missing)));
    REQUIRE(oracle::brute_chromatic(g) == chromatic_by_assignments(g));
  }
}

TEST_CASE("interval algorithms agree with brute force on every matching") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : oracle::enumerate_matchings(n)) {
      const Graph g = graph_from_intervals(f);
      REQUIRE(clique_number(f) == oracle::brute_clique(g));
      REQUIRE(independence_number(f).size() == oracle::brute_independence(g));
      REQUIRE(chromatic_number(f) == oracle::brute_chromatic(g));
    }
  }
}
