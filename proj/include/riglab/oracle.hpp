#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "riglab/core.hpp"

namespace riglab::oracle {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxMatchingN = 7;
inline constexpr int kMaxCliqueN = 20;
inline constexpr int kMaxChromaticN = 12;

/// (2n - 1)!!, the number of perfect matchings of 2n points.
std::uint64_t matching_count(int n);

/// Walks every perfect matching of {1, ..., 2n} exactly once, in canonical
/// order: the smallest free endpoint is always matched first and its partner
/// runs through the free endpoints in ascending order, the last pair varying
/// fastest. Each matching is yielded as an interval family (intervals listed
/// by left endpoint). The enumerator can be started at any rank, so a long
/// enumeration can be split or resumed.
class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(int n, std::uint64_t start_rank = 0);

  std::optional<IntervalFamily> next();
  std::uint64_t rank() const { return rank_; }
  std::uint64_t total() const { return total_; }

 private:
  IntervalFamily build() const;

  int n_;
  std::uint64_t rank_;
  std::uint64_t total_;
  std::vector<int> digits_;  // digit k ranges over 0 .. 2(n - k) - 2
};

/// Materialises the whole enumeration.
std::vector<IntervalFamily> enumerate_matchings(int n);

/// Distribution of an integer statistic over a finite uniform space.
struct ExactDistribution {
  std::map<std::int64_t, Rational> outcomes;

  Rational total() const;
  Rational mean() const;
  Rational variance() const;
  Rational probability(std::int64_t value) const;
};

/// P(the graph has a vertex of degree n - 1) over all matchings.
Rational exact_prob_universal(int n);

/// Distribution of |E| over all matchings.
ExactDistribution exact_edge_count_distribution(int n);

/// Exact clique number by branch and bound (n <= 20).
int brute_clique(const Graph& graph);
/// Exact independence number (n <= 20).
int brute_independence(const Graph& graph);
/// Exact chromatic number by trying k = 1, 2, ... colours (n <= 12).
int brute_chromatic(const Graph& graph);

}  // namespace riglab::oracle
