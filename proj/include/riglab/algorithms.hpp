#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riglab/core.hpp"

namespace riglab {

class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class EventKind { kOpen = 0, kClose = 1 };

struct SweepEvent {
  double coordinate = 0.0;
  EventKind kind = EventKind::kOpen;
  int vertex = 0;
};

/// Endpoint events sorted by coordinate; at equal coordinates opens come
/// before closes, which makes touching closed intervals overlap.
std::vector<SweepEvent> sweep_events(const IntervalFamily& family);

/// A chain in the interval order: members listed so that each one ends
/// strictly before the next one starts.
struct ChainResult {
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
};

struct Coloring {
  std::vector<int> color;  // per vertex, 0-based
  int colors = 0;
};

// Interval-graph invariants computed on the family, never on the O(n^2) graph.

/// Maximum number of intervals sharing a point; equals the clique number.
int clique_number(const IntervalFamily& family);
/// Number of intervals with lo <= x <= hi.
int count_containing(const IntervalFamily& family, double x);
/// Earliest-finishing greedy chain; its size is the independence number.
ChainResult independence_number(const IntervalFamily& family);
/// Least-free-colour greedy in left-endpoint order.
Coloring greedy_coloring(const IntervalFamily& family);
/// Colour count of greedy_coloring. Unless built with
/// RIGLAB_NO_VERIFY_PERFECT, a disagreement with clique_number throws
/// InternalConsistencyError.
int chromatic_number(const IntervalFamily& family);

/// Degrees of all vertices of the intersection graph in O(n log n).
std::vector<int> interval_degrees(const IntervalFamily& family);
/// Degree of a single vertex in O(n).
int interval_degree(const IntervalFamily& family, int vertex);
/// |E| of the intersection graph in O(n log n).
std::int64_t interval_edge_count(const IntervalFamily& family);
/// Whether some interval meets all the others, in O(n).
bool interval_has_universal_vertex(const IntervalFamily& family);
/// Exact diameter of the intersection graph in O(n log n); nullopt when the
/// graph is disconnected.
std::optional<int> interval_diameter(const IntervalFamily& family);

// Generic graph statistics.

/// Largest BFS distance over all pairs; nullopt when disconnected. The BFS
/// expands whole frontiers with bit-row unions.
std::optional<int> diameter(const Graph& graph);
/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& graph);
/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& graph, const std::vector<int>& vertices);

struct GraphStats {
  int n = 0;
  std::int64_t edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> omega;  // interval families only
  std::optional<int> chi;
  std::optional<int> alpha;
  bool diameter_computed = false;
  std::optional<int> diameter;  // nullopt with diameter_computed: disconnected
  int components = 0;
};

/// Full statistics of an interval family; the diameter is optional because
/// it costs an all-pairs search.
GraphStats graph_stats(const IntervalFamily& family, bool with_diameter);
/// Statistics available for an arbitrary graph (no omega/chi/alpha).
GraphStats graph_stats(const Graph& graph, bool with_diameter);

}  // namespace riglab
