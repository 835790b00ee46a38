#include "riglab/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace riglab {

Interval make_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("make_interval: endpoints must be finite");
  }
  return a <= b ? Interval{a, b} : Interval{b, a};
}

bool intervals_intersect(const Interval& a, const Interval& b) noexcept {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

bool interval_precedes(const Interval& a, const Interval& b) noexcept {
  return a.hi < b.lo;
}

double radius(const Interval& interval) {
  if (!(interval.lo >= 0.0 && interval.hi <= 1.0 && interval.lo <= interval.hi)) {
    throw DomainError("radius: interval must lie inside [0, 1]");
  }
  return std::hypot(interval.lo, 1.0 - interval.hi);
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string_view model_name(const ModelParams& params) {
  return std::visit(Overloaded{
                        [](const ScheinermanParams&) { return std::string_view("scheinerman"); },
                        [](const MatchingParams&) { return std::string_view("matching"); },
                        [](const PrisnerParams&) { return std::string_view("prisner"); },
                        [](const GnpParams&) { return std::string_view("gnp"); },
                        [](const DotProductParams&) { return std::string_view("dotprod"); },
                        [](const ThresholdParams&) { return std::string_view("threshold"); },
                        [](const CustomParams&) { return std::string_view("custom"); },
                    },
                    params);
}

int model_size(const ModelParams& params) {
  return std::visit([](const auto& p) { return p.n; }, params);
}

bool is_interval_model(const ModelParams& params) {
  return std::holds_alternative<ScheinermanParams>(params) ||
         std::holds_alternative<MatchingParams>(params) ||
         std::holds_alternative<PrisnerParams>(params) ||
         std::holds_alternative<CustomParams>(params);
}

void validate(const ModelParams& params) {
  const int n = model_size(params);
  const bool custom = std::holds_alternative<CustomParams>(params);
  if (custom ? n < 0 : n < 1) throw DomainError("model parameter n must be >= 1");
  std::visit(Overloaded{
                 [](const PrisnerParams& p) {
                   if (!(p.m >= 1.0) || !std::isfinite(p.m)) {
                     throw DomainError("prisner: m must be a finite value >= 1");
                   }
                 },
                 [](const GnpParams& p) {
                   if (!(p.p >= 0.0 && p.p <= 1.0)) throw DomainError("gnp: p must lie in [0, 1]");
                 },
                 [](const DotProductParams& p) {
                   if (!(p.r >= 0.0) || !std::isfinite(p.r)) {
                     throw DomainError("dotprod: r must be a finite value >= 0");
                   }
                   if (p.dimension != 1) {
                     throw DomainError("dotprod: only latent dimension 1 is supported");
                   }
                 },
                 [](const auto&) {},
             },
             params);
}

IntervalFamily::IntervalFamily(std::vector<Interval> intervals, ModelParams params,
                               RngSeed seed, EndpointPolicy policy)
    : intervals_(std::move(intervals)), params_(params), seed_(seed), policy_(policy) {
  validate(params_);
  if (model_size(params_) != size()) {
    throw DomainError("IntervalFamily: interval count " + std::to_string(size()) +
                      " does not match n = " + std::to_string(model_size(params_)));
  }
  for (const auto& interval : intervals_) {
    if (!std::isfinite(interval.lo) || !std::isfinite(interval.hi) || interval.lo > interval.hi) {
      throw DomainError("IntervalFamily: intervals must be finite with lo <= hi");
    }
  }
  if (policy_ == EndpointPolicy::kDistinct) {
    std::vector<double> endpoints;
    endpoints.reserve(2 * intervals_.size());
    for (const auto& interval : intervals_) {
      endpoints.push_back(interval.lo);
      endpoints.push_back(interval.hi);
    }
    std::sort(endpoints.begin(), endpoints.end());
    auto dup = std::adjacent_find(endpoints.begin(), endpoints.end());
    if (dup != endpoints.end()) {
      throw DuplicateEndpointError("IntervalFamily: duplicate endpoint " + std::to_string(*dup));
    }
  }
}

IntervalFamily IntervalFamily::custom(std::vector<Interval> intervals) {
  const int n = static_cast<int>(intervals.size());
  return IntervalFamily(std::move(intervals), CustomParams{n}, RngSeed{},
                        EndpointPolicy::kAllowTies);
}

// ---------------------------------------------------------------------------
// Graph

Graph::Builder::Builder(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw DomainError("Graph: vertex count must be non-negative");
  bits_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
}

void Graph::Builder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("Graph: vertex out of range");
  if (u == v) throw DomainError("Graph: self-loops are not allowed");
  const auto w = static_cast<std::size_t>(words_);
  bits_[static_cast<std::size_t>(u) * w + static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * w + static_cast<std::size_t>(u >> 6)] |= 1ULL << (u & 63);
}

bool Graph::Builder::has_edge(int u, int v) const {
  const auto w = static_cast<std::size_t>(words_);
  return (bits_[static_cast<std::size_t>(u) * w + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
}

Graph Graph::Builder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.bits_ = std::move(bits_);
  std::int64_t ones = 0;
  for (auto word : g.bits_) ones += std::popcount(word);
  g.edges_ = ones / 2;
  return g;
}

Graph::Graph(int n) : Graph(Builder(n).build()) {}

Graph Graph::complete(int n) {
  Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Builder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto word : row(v)) d += std::popcount(word);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t word = r[w];
    while (word != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph graph_from_intervals(const IntervalFamily& family) {
  const int n = family.size();
  struct Event {
    double x;
    int kind;  // 0 = open, 1 = close; opens sort first at equal x
    int vertex;
  };
  std::vector<Event> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    events.push_back({family[i].lo, 0, i});
    events.push_back({family[i].hi, 1, i});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.vertex < b.vertex;
  });

  Graph::Builder builder(n);
  std::vector<int> active;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (const auto& e : events) {
    if (e.kind == 0) {
      for (int other : active) builder.add_edge(e.vertex, other);
      slot[static_cast<std::size_t>(e.vertex)] = static_cast<int>(active.size());
      active.push_back(e.vertex);
    } else {
      const int pos = slot[static_cast<std::size_t>(e.vertex)];
      const int last = active.back();
      active[static_cast<std::size_t>(pos)] = last;
      slot[static_cast<std::size_t>(last)] = pos;
      active.pop_back();
    }
  }
  return std::move(builder).build();
}

Graph graph_from_intervals_naive(const IntervalFamily& family) {
  const int n = family.size();
  Graph::Builder builder(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intervals_intersect(family[i], family[j])) builder.add_edge(i, j);
  return std::move(builder).build();
}

DegreeSummary degree_summary(std::vector<int> degrees) {
  DegreeSummary s;
  s.degrees = std::move(degrees);
  if (s.degrees.empty()) return s;
  auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
  s.min = *lo;
  s.max = *hi;
  const double total = std::accumulate(s.degrees.begin(), s.degrees.end(), 0.0);
  s.mean = total / static_cast<double>(s.degrees.size());
  return s;
}

DegreeSummary degree_summary(const Graph& graph) {
  std::vector<int> degrees(static_cast<std::size_t>(graph.size()));
  for (int v = 0; v < graph.size(); ++v) degrees[static_cast<std::size_t>(v)] = graph.degree(v);
  return degree_summary(std::move(degrees));
}

bool has_universal_vertex(const Graph& graph) {
  if (graph.size() == 0) throw DomainError("has_universal_vertex: empty graph");
  for (int v = 0; v < graph.size(); ++v)
    if (graph.degree(v) == graph.size() - 1) return true;
  return false;
}

}  // namespace riglab
