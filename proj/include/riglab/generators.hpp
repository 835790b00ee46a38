#pragma once

#include <vector>

#include "riglab/core.hpp"
#include "riglab/rng.hpp"

namespace riglab {

// Every generator is a pure function of its parameters and seed.

/// n intervals from 2n Uniform[0,1) draws taken in the order X1, Y1, X2, Y2, ...
IntervalFamily gen_scheinerman(int n, RngSeed seed);

/// Endpoints 1..2n paired by a uniformly random perfect matching. The matching
/// is drawn sequentially: the smallest free endpoint is paired with a
/// uniformly chosen free partner. Intervals are listed by left endpoint.
IntervalFamily gen_matching(int n, RngSeed seed);

/// Unit intervals [L, L + 1] with L ~ Uniform[0, m - 1], so every interval
/// lies in [0, m]. Requires m >= 1.
IntervalFamily gen_prisner(int n, double m, RngSeed seed);

/// Erdos-Renyi G(n, p); pairs (i, j), i < j, are visited lexicographically.
Graph gen_gnp(int n, double p, RngSeed seed);

/// x_v ~ Uniform[0,1); v ~ w iff x_v + x_w >= 1.
Graph gen_threshold(int n, RngSeed seed);

struct DotProductGraph {
  Graph graph;
  std::vector<double> latent;
};

/// One-dimensional random dot-product graph with f(t) = t^r: latent positions
/// x_v ~ Uniform[0,1) drawn first, then each pair (lexicographic) is an edge
/// with probability (x_v x_w)^r.
DotProductGraph gen_dot_product(int n, double r, RngSeed seed, int dimension = 1);

/// Dispatch on the variant. Interval models return a family; the others throw.
IntervalFamily generate_family(const ModelParams& params, RngSeed seed);
/// Graph for any model (interval models go through the sweep).
Graph generate_graph(const ModelParams& params, RngSeed seed);

}  // namespace riglab
