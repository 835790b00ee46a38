#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "riglab/rng.hpp"

namespace riglab {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a family carries two equal endpoints under a model whose
// endpoints are continuous (ties have probability zero there).
class DuplicateEndpointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Closed interval [lo, hi] on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Builds [min(a,b), max(a,b)]; non-finite input is a DomainError.
Interval make_interval(double a, double b);

bool intervals_intersect(const Interval& a, const Interval& b) noexcept;

/// Interval order: a precedes b iff a ends strictly before b starts.
bool interval_precedes(const Interval& a, const Interval& b) noexcept;

/// sqrt(lo^2 + (1 - hi)^2) for an interval inside [0, 1].
double radius(const Interval& interval);

// Model parameters, one alternative per random-graph model. `Custom` tags
// families that were read from a file or assembled by hand.
struct ScheinermanParams { int n = 0; };
struct MatchingParams { int n = 0; };
struct PrisnerParams { int n = 0; double m = 1.0; };
struct GnpParams { int n = 0; double p = 0.0; };
struct DotProductParams { int n = 0; double r = 1.0; int dimension = 1; };
struct ThresholdParams { int n = 0; };
struct CustomParams { int n = 0; };

using ModelParams = std::variant<ScheinermanParams, MatchingParams, PrisnerParams,
                                 GnpParams, DotProductParams, ThresholdParams,
                                 CustomParams>;

std::string_view model_name(const ModelParams& params);
int model_size(const ModelParams& params);
bool is_interval_model(const ModelParams& params);
/// Throws DomainError when a parameter is outside its admissible range.
void validate(const ModelParams& params);

enum class EndpointPolicy { kDistinct, kAllowTies };

/// Ordered list of intervals plus the provenance needed to regenerate it.
class IntervalFamily {
 public:
  IntervalFamily(std::vector<Interval> intervals, ModelParams params, RngSeed seed,
                 EndpointPolicy policy = EndpointPolicy::kDistinct);

  /// Hand-built family; endpoints may tie.
  static IntervalFamily custom(std::vector<Interval> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](int i) const { return intervals_[static_cast<std::size_t>(i)]; }
  std::span<const Interval> intervals() const { return intervals_; }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }

  const ModelParams& params() const { return params_; }
  RngSeed seed() const { return seed_; }
  EndpointPolicy policy() const { return policy_; }

 private:
  std::vector<Interval> intervals_;
  ModelParams params_;
  RngSeed seed_;
  EndpointPolicy policy_;
};

/// Simple undirected graph stored as one bit row per vertex.
class Graph {
 public:
  class Builder {
   public:
    explicit Builder(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    Graph build() &&;

   private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
  };

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int size() const { return n_; }
  int words_per_row() const { return words_; }
  bool adjacent(int u, int v) const {
    return (bits_[row_offset(u) + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
  }
  int degree(int v) const;
  std::int64_t edge_count() const { return edges_; }
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  std::vector<int> neighbors(int v) const;
  /// Edge list with i < j, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  std::int64_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Intersection graph via an endpoint sweep, O(n log n + |E|).
Graph graph_from_intervals(const IntervalFamily& family);
/// Pairwise O(n^2) construction, kept as the reference for the sweep.
Graph graph_from_intervals_naive(const IntervalFamily& family);

struct DegreeSummary {
  std::vector<int> degrees;
  int min = 0;
  int max = 0;
  double mean = 0.0;
};

DegreeSummary degree_summary(const Graph& graph);
DegreeSummary degree_summary(std::vector<int> degrees);

/// True iff some vertex has degree n - 1. Throws DomainError for n = 0.
bool has_universal_vertex(const Graph& graph);

}  // namespace riglab
