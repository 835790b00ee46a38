#include "riglab/generators.hpp"

#include <algorithm>
#include <cmath>

namespace riglab {

IntervalFamily gen_scheinerman(int n, RngSeed seed) {
  const ScheinermanParams params{n};
  validate(params);
  Rng rng(seed);
  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform01();
    const double y = rng.uniform01();
    intervals.push_back(make_interval(x, y));
  }
  return IntervalFamily(std::move(intervals), params, seed);
}

IntervalFamily gen_matching(int n, RngSeed seed) {
  const MatchingParams params{n};
  validate(params);
  Rng rng(seed);
  // Endpoints are visited in increasing order; each unmatched one is paired
  // with a uniform pick from the remaining free pool (swap-remove keeps O(1)).
  const auto points = 2 * static_cast<std::size_t>(n);
  std::vector<int> pool(points);
  std::vector<std::size_t> where(points + 1);
  for (std::size_t i = 0; i < points; ++i) {
    pool[i] = static_cast<int>(i) + 1;
    where[i + 1] = i;
  }
  std::vector<bool> matched(points + 1, false);
  auto take = [&](int point) {
    const std::size_t pos = where[static_cast<std::size_t>(point)];
    const int last = pool.back();
    pool[pos] = last;
    where[static_cast<std::size_t>(last)] = pos;
    pool.pop_back();
    matched[static_cast<std::size_t>(point)] = true;
  };

  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n));
  for (int left = 1; left <= static_cast<int>(points); ++left) {
    if (matched[static_cast<std::size_t>(left)]) continue;
    take(left);
    const int right = pool[rng.uniform_below(pool.size())];
    take(right);
    intervals.push_back({static_cast<double>(left), static_cast<double>(right)});
  }
  return IntervalFamily(std::move(intervals), params, seed);
}

IntervalFamily gen_prisner(int n, double m, RngSeed seed) {
  const PrisnerParams params{n, m};
  validate(params);
  Rng rng(seed);
  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // hi - 1 is exact for hi >= 1, so every interval has length exactly 1.
    const double hi = rng.uniform01() * (m - 1.0) + 1.0;
    intervals.push_back({hi - 1.0, hi});
  }
  // m == 1 collapses every interval onto [0, 1].
  return IntervalFamily(std::move(intervals), params, seed, EndpointPolicy::kAllowTies);
}

Graph gen_gnp(int n, double p, RngSeed seed) {
  validate(GnpParams{n, p});
  Rng rng(seed);
  Graph::Builder builder(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) builder.add_edge(i, j);
  return std::move(builder).build();
}

Graph gen_threshold(int n, RngSeed seed) {
  validate(ThresholdParams{n});
  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (auto& v : x) v = rng.uniform01();
  Graph::Builder builder(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)] >= 1.0)
        builder.add_edge(i, j);
  return std::move(builder).build();
}

DotProductGraph gen_dot_product(int n, double r, RngSeed seed, int dimension) {
  validate(DotProductParams{n, r, dimension});
  Rng rng(seed);
  DotProductGraph out;
  out.latent.resize(static_cast<std::size_t>(n));
  for (auto& v : out.latent) v = rng.uniform01();
  Graph::Builder builder(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double t = out.latent[static_cast<std::size_t>(i)] * out.latent[static_cast<std::size_t>(j)];
      const double prob = r == 1.0 ? t : std::pow(t, r);
      if (rng.bernoulli(prob)) builder.add_edge(i, j);
    }
  }
  out.graph = std::move(builder).build();
  return out;
}

IntervalFamily generate_family(const ModelParams& params, RngSeed seed) {
  if (const auto* p = std::get_if<ScheinermanParams>(&params)) return gen_scheinerman(p->n, seed);
  if (const auto* p = std::get_if<MatchingParams>(&params)) return gen_matching(p->n, seed);
  if (const auto* p = std::get_if<PrisnerParams>(&params)) return gen_prisner(p->n, p->m, seed);
  throw DomainError("generate_family: " + std::string(model_name(params)) +
                    " is not an interval model");
}

Graph generate_graph(const ModelParams& params, RngSeed seed) {
  if (const auto* p = std::get_if<GnpParams>(&params)) return gen_gnp(p->n, p->p, seed);
  if (const auto* p = std::get_if<ThresholdParams>(&params)) return gen_threshold(p->n, seed);
  if (const auto* p = std::get_if<DotProductParams>(&params)) {
    return gen_dot_product(p->n, p->r, seed, p->dimension).graph;
  }
  return graph_from_intervals(generate_family(params, seed));
}

}  // namespace riglab
