#include "riglab/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace riglab {

namespace {

std::vector<double> sorted_los(const IntervalFamily& family) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(family.size()));
  for (const auto& iv : family) v.push_back(iv.lo);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> sorted_his(const IntervalFamily& family) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(family.size()));
  for (const auto& iv : family) v.push_back(iv.hi);
  std::sort(v.begin(), v.end());
  return v;
}

void require_nonempty(const IntervalFamily& family, const char* what) {
  if (family.empty()) throw DomainError(std::string(what) + ": empty family");
}

}  // namespace

std::vector<SweepEvent> sweep_events(const IntervalFamily& family) {
  std::vector<SweepEvent> events;
  events.reserve(2 * static_cast<std::size_t>(family.size()));
  for (int i = 0; i < family.size(); ++i) {
    events.push_back({family[i].lo, EventKind::kOpen, i});
    events.push_back({family[i].hi, EventKind::kClose, i});
  }
  std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
    if (a.coordinate != b.coordinate) return a.coordinate < b.coordinate;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.vertex < b.vertex;
  });
  return events;
}

int clique_number(const IntervalFamily& family) {
  require_nonempty(family, "clique_number");
  int load = 0;
  int best = 0;
  for (const auto& e : sweep_events(family)) {
    if (e.kind == EventKind::kOpen) {
      best = std::max(best, ++load);
    } else {
      --load;
    }
  }
  return best;
}

int count_containing(const IntervalFamily& family, double x) {
  return static_cast<int>(std::count_if(family.begin(), family.end(),
                                        [x](const Interval& iv) { return iv.contains(x); }));
}

ChainResult independence_number(const IntervalFamily& family) {
  require_nonempty(family, "independence_number");
  std::vector<int> order(static_cast<std::size_t>(family.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (family[a].hi != family[b].hi) return family[a].hi < family[b].hi;
    return a < b;
  });
  ChainResult chain;
  double last_hi = -std::numeric_limits<double>::infinity();
  for (int v : order) {
    if (family[v].lo > last_hi) {
      chain.vertices.push_back(v);
      last_hi = family[v].hi;
    }
  }
  return chain;
}

Coloring greedy_coloring(const IntervalFamily& family) {
  require_nonempty(family, "greedy_coloring");
  Coloring out;
  out.color.assign(static_cast<std::size_t>(family.size()), -1);
  std::priority_queue<int, std::vector<int>, std::greater<>> released;
  for (const auto& e : sweep_events(family)) {
    auto& c = out.color[static_cast<std::size_t>(e.vertex)];
    if (e.kind == EventKind::kOpen) {
      if (released.empty()) {
        c = out.colors++;
      } else {
        c = released.top();
        released.pop();
      }
    } else {
      released.push(c);
    }
  }
  return out;
}

int chromatic_number(const IntervalFamily& family) {
  const int colors = greedy_coloring(family).colors;
#ifndef RIGLAB_NO_VERIFY_PERFECT
  const int omega = clique_number(family);
  if (colors != omega) {
    throw InternalConsistencyError("chromatic_number: greedy used " + std::to_string(colors) +
                                   " colours but the clique number is " +
                                   std::to_string(omega));
  }
#endif
  return colors;
}

std::vector<int> interval_degrees(const IntervalFamily& family) {
  const auto los = sorted_los(family);
  const auto his = sorted_his(family);
  const int n = family.size();
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto ended_before = std::lower_bound(his.begin(), his.end(), family[i].lo) - his.begin();
    const auto starts_after = los.end() - std::upper_bound(los.begin(), los.end(), family[i].hi);
    degrees[static_cast<std::size_t>(i)] = n - 1 - static_cast<int>(ended_before + starts_after);
  }
  return degrees;
}

int interval_degree(const IntervalFamily& family, int vertex) {
  const Interval& self = family[vertex];
  int d = 0;
  for (int j = 0; j < family.size(); ++j) {
    if (j != vertex && intervals_intersect(self, family[j])) ++d;
  }
  return d;
}

std::int64_t interval_edge_count(const IntervalFamily& family) {
  const auto his = sorted_his(family);
  const auto n = static_cast<std::int64_t>(family.size());
  std::int64_t disjoint = 0;
  for (const auto& iv : family) {
    disjoint += std::lower_bound(his.begin(), his.end(), iv.lo) - his.begin();
  }
  return n * (n - 1) / 2 - disjoint;
}

bool interval_has_universal_vertex(const IntervalFamily& family) {
  require_nonempty(family, "interval_has_universal_vertex");
  double min_hi = std::numeric_limits<double>::infinity();
  double max_lo = -std::numeric_limits<double>::infinity();
  for (const auto& iv : family) {
    min_hi = std::min(min_hi, iv.hi);
    max_lo = std::max(max_lo, iv.lo);
  }
  return std::any_of(family.begin(), family.end(), [&](const Interval& iv) {
    return iv.lo <= min_hi && iv.hi >= max_lo;
  });
}

std::optional<int> interval_diameter(const IntervalFamily& family) {
  require_nonempty(family, "interval_diameter");
  const int n = family.size();
  if (n == 1) return 0;

  std::vector<int> by_lo(static_cast<std::size_t>(n));
  std::iota(by_lo.begin(), by_lo.end(), 0);
  std::sort(by_lo.begin(), by_lo.end(), [&](int a, int b) { return family[a].lo < family[b].lo; });
  std::vector<double> los(static_cast<std::size_t>(n));
  std::vector<double> reach(static_cast<std::size_t>(n));  // max hi over the first k+1 by lo
  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < by_lo.size(); ++k) {
    const Interval& iv = family[by_lo[k]];
    if (k > 0 && iv.lo > running) return std::nullopt;  // gap: disconnected
    running = std::max(running, iv.hi);
    los[k] = iv.lo;
    reach[k] = running;
  }

  double min_hi = std::numeric_limits<double>::infinity();
  double max_lo = -std::numeric_limits<double>::infinity();
  for (const auto& iv : family) {
    min_hi = std::min(min_hi, iv.hi);
    max_lo = std::max(max_lo, iv.lo);
  }
  if (max_lo <= min_hi) return 1;  // pairwise intersecting

  // Walk right from the earliest-ending interval towards the latest-starting
  // one; the right frontier after t hops is the furthest hi among intervals
  // starting at or before the previous frontier. That pair is diametral.
  int hops = 1;
  double frontier = min_hi;
  while (frontier < max_lo) {
    const auto k = std::upper_bound(los.begin(), los.end(), frontier) - los.begin();
    const double next = reach[static_cast<std::size_t>(k - 1)];
    if (next <= frontier) return std::nullopt;
    frontier = next;
    ++hops;
  }
  return hops;
}

std::optional<int> diameter(const Graph& graph) {
  const int n = graph.size();
  if (n == 0) throw DomainError("diameter: empty graph");
  const auto words = static_cast<std::size_t>(graph.words_per_row());
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  int best = 0;
  for (int source = 0; source < n; ++source) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[static_cast<std::size_t>(source >> 6)] |= 1ULL << (source & 63);
    frontier[static_cast<std::size_t>(source >> 6)] |= 1ULL << (source & 63);
    int reached = 1;
    int depth = 0;
    while (true) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[w];
        while (bits != 0) {
          const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
          bits &= bits - 1;
          auto row = graph.row(v);
          for (std::size_t k = 0; k < words; ++k) next[k] |= row[k];
        }
      }
      int added = 0;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        added += std::popcount(next[w]);
      }
      if (added == 0) break;
      reached += added;
      ++depth;
      frontier.swap(next);
    }
    if (reached < n) return std::nullopt;
    best = std::max(best, depth);
  }
  return best;
}

std::vector<std::vector<int>> connected_components(const Graph& graph) {
  const int n = graph.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> components;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> component;
    seen[static_cast<std::size_t>(start)] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (int w : graph.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

Graph induced_subgraph(const Graph& graph, const std::vector<int>& vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph::Builder builder(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (graph.adjacent(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]))
        builder.add_edge(a, b);
  return std::move(builder).build();
}

GraphStats graph_stats(const Graph& graph, bool with_diameter) {
  GraphStats s;
  s.n = graph.size();
  s.edges = graph.edge_count();
  const auto degrees = degree_summary(graph);
  s.min_degree = degrees.min;
  s.max_degree = degrees.max;
  s.components = static_cast<int>(connected_components(graph).size());
  if (with_diameter && s.n > 0) {
    s.diameter_computed = true;
    s.diameter = diameter(graph);
  }
  return s;
}

GraphStats graph_stats(const IntervalFamily& family, bool with_diameter) {
  GraphStats s = graph_stats(graph_from_intervals(family), with_diameter);
  if (!family.empty()) {
    s.omega = clique_number(family);
    s.chi = chromatic_number(family);
    s.alpha = independence_number(family).size();
  }
  return s;
}

}  // namespace riglab
