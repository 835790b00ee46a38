#include "riglab/oracle.hpp"

#include <bit>
#include <string>

#include "riglab/algorithms.hpp"

namespace riglab::oracle {

namespace {

void require_matching_n(int n) {
  if (n < 1 || n > kMaxMatchingN) {
    throw DomainError("matching enumeration supports 1 <= n <= " + std::to_string(kMaxMatchingN) +
                      ", got " + std::to_string(n));
  }
}

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& graph) {
  std::vector<Mask> masks(static_cast<std::size_t>(graph.size()), 0);
  for (int u = 0; u < graph.size(); ++u)
    for (int v = 0; v < graph.size(); ++v)
      if (u != v && graph.adjacent(u, v)) masks[static_cast<std::size_t>(u)] |= Mask{1} << v;
  return masks;
}

void max_clique(const std::vector<Mask>& adj, Mask chosen, Mask candidates, int& best) {
  const int size = std::popcount(chosen);
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  max_clique(adj, chosen | bit, candidates & adj[static_cast<std::size_t>(v)], best);
  max_clique(adj, chosen, candidates & ~bit, best);
}

bool colour(const std::vector<Mask>& adj, std::vector<int>& colours, int v, int k) {
  const int n = static_cast<int>(adj.size());
  if (v == n) return true;
  int highest = -1;
  for (int u = 0; u < v; ++u) highest = std::max(highest, colours[static_cast<std::size_t>(u)]);
  // Colours are interchangeable: vertex v never opens more than one new colour.
  const int limit = std::min(k, highest + 2);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (((adj[static_cast<std::size_t>(v)] >> u) & 1U) && colours[static_cast<std::size_t>(u)] == c) ok = false;
    }
    if (!ok) continue;
    colours[static_cast<std::size_t>(v)] = c;
    if (colour(adj, colours, v + 1, k)) return true;
  }
  colours[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace

std::uint64_t matching_count(int n) {
  if (n < 0) throw DomainError("matching_count: n must be >= 0");
  std::uint64_t count = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) count *= static_cast<std::uint64_t>(k);
  return count;
}

MatchingEnumerator::MatchingEnumerator(int n, std::uint64_t start_rank)
    : n_(n), rank_(start_rank), total_(0), digits_(static_cast<std::size_t>(n), 0) {
  require_matching_n(n);
  total_ = matching_count(n);
  // Mixed-radix decomposition of the rank, last digit fastest.
  std::uint64_t r = start_rank;
  for (int k = n_ - 1; k >= 0; --k) {
    const auto radix = static_cast<std::uint64_t>(2 * (n_ - k) - 1);
    digits_[static_cast<std::size_t>(k)] = static_cast<int>(r % radix);
    r /= radix;
  }
}

IntervalFamily MatchingEnumerator::build() const {
  std::vector<int> free_points(2 * static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < free_points.size(); ++i) free_points[i] = static_cast<int>(i) + 1;
  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) {
    const int left = free_points.front();
    const auto pick = static_cast<std::size_t>(1 + digits_[static_cast<std::size_t>(k)]);
    const int right = free_points[pick];
    intervals.push_back({static_cast<double>(left), static_cast<double>(right)});
    free_points.erase(free_points.begin() + static_cast<std::ptrdiff_t>(pick));
    free_points.erase(free_points.begin());
  }
  return IntervalFamily(std::move(intervals), MatchingParams{n_}, RngSeed{});
}

std::optional<IntervalFamily> MatchingEnumerator::next() {
  if (rank_ >= total_) return std::nullopt;
  IntervalFamily family = build();
  ++rank_;
  for (int k = n_ - 1; k >= 0; --k) {
    auto& d = digits_[static_cast<std::size_t>(k)];
    if (++d < 2 * (n_ - k) - 1) break;
    d = 0;
  }
  return family;
}

std::vector<IntervalFamily> enumerate_matchings(int n) {
  MatchingEnumerator it(n);
  std::vector<IntervalFamily> out;
  out.reserve(static_cast<std::size_t>(it.total()));
  while (auto family = it.next()) out.push_back(std::move(*family));
  return out;
}

Rational ExactDistribution::total() const {
  Rational sum = 0;
  for (const auto& [value, p] : outcomes) sum += p;
  return sum;
}

Rational ExactDistribution::mean() const {
  Rational sum = 0;
  for (const auto& [value, p] : outcomes) sum += p * value;
  return sum;
}

Rational ExactDistribution::variance() const {
  const Rational mu = mean();
  Rational sum = 0;
  for (const auto& [value, p] : outcomes) {
    const Rational d = Rational(value) - mu;
    sum += p * d * d;
  }
  return sum;
}

Rational ExactDistribution::probability(std::int64_t value) const {
  auto it = outcomes.find(value);
  return it == outcomes.end() ? Rational(0) : it->second;
}

Rational exact_prob_universal(int n) {
  require_matching_n(n);
  MatchingEnumerator it(n);
  std::uint64_t hits = 0;
  while (auto family = it.next()) {
    if (has_universal_vertex(graph_from_intervals(*family))) ++hits;
  }
  return Rational(BigInt(hits), BigInt(it.total()));
}

ExactDistribution exact_edge_count_distribution(int n) {
  require_matching_n(n);
  MatchingEnumerator it(n);
  std::map<std::int64_t, std::uint64_t> counts;
  while (auto family = it.next()) ++counts[graph_from_intervals(*family).edge_count()];
  ExactDistribution dist;
  for (const auto& [value, count] : counts) {
    dist.outcomes[value] = Rational(BigInt(count), BigInt(it.total()));
  }
  return dist;
}

int brute_clique(const Graph& graph) {
  if (graph.size() > kMaxCliqueN) {
    throw DomainError("brute_clique: n > " + std::to_string(kMaxCliqueN) + " refused");
  }
  if (graph.size() == 0) return 0;
  const auto adj = adjacency_masks(graph);
  int best = 0;
  const Mask all = graph.size() == 32 ? ~Mask{0} : (Mask{1} << graph.size()) - 1;
  max_clique(adj, 0, all, best);
  return best;
}

int brute_independence(const Graph& graph) {
  if (graph.size() > kMaxCliqueN) {
    throw DomainError("brute_independence: n > " + std::to_string(kMaxCliqueN) + " refused");
  }
  Graph::Builder complement(graph.size());
  for (int u = 0; u < graph.size(); ++u)
    for (int v = u + 1; v < graph.size(); ++v)
      if (!graph.adjacent(u, v)) complement.add_edge(u, v);
  return brute_clique(std::move(complement).build());
}

int brute_chromatic(const Graph& graph) {
  if (graph.size() > kMaxChromaticN) {
    throw DomainError("brute_chromatic: n > " + std::to_string(kMaxChromaticN) + " refused");
  }
  const int n = graph.size();
  if (n == 0) return 0;
  const auto adj = adjacency_masks(graph);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colours(static_cast<std::size_t>(n), -1);
    if (colour(adj, colours, 0, k)) return k;
  }
  return n;
}

}  // namespace riglab::oracle
