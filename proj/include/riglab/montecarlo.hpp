#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "riglab/rng.hpp"

namespace riglab::mc {

struct EstimateWithCI {
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double level = 0.95;
  std::int64_t trials = 0;
};

/// Two-sided standard normal quantile for a confidence level in (0, 1).
double z_for_level(double level);

/// Wilson score interval for a binomial proportion.
EstimateWithCI estimate_proportion(std::int64_t successes, std::int64_t trials,
                                   double level = 0.95);

/// Sample mean with a normal-theory interval mean +- z s / sqrt(T).
EstimateWithCI estimate_mean(std::span<const double> values, double level = 0.95);

/// Newcombe's hybrid score interval for p1 - p0 built from two Wilson
/// intervals.
EstimateWithCI estimate_difference(std::int64_t successes1, std::int64_t trials1,
                                   std::int64_t successes0, std::int64_t trials0,
                                   double level = 0.95);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single value
  std::int64_t count = 0;
};

/// Two-pass mean and variance, summed in index order.
Moments sample_moments(std::span<const double> values);

/// Right-continuous empirical distribution function.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);

  /// Fraction of samples <= x.
  double operator()(double x) const;
  /// Fraction of samples < x.
  double left_limit(double x) const;
  std::size_t size() const { return sorted_.size(); }
  std::span<const double> sorted_values() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// sup |F_n - F| evaluated on both sides of every sample jump and on `grid`
/// evenly spaced points of `domain`.
double ks_distance(const EmpiricalCdf& ecdf, const std::function<double(double)>& theory,
                   int grid, std::pair<double, double> domain);
/// Same, with the grid spanning the sample range.
double ks_distance(const EmpiricalCdf& ecdf, const std::function<double(double)>& theory,
                   int grid);

/// Runs fn(trial, seed) for trial = 0..trials-1, with seed =
/// derive_trial_seed(master, trial), on up to `threads` workers (0 = hardware
/// concurrency). Results come back indexed by trial, so any reduction done in
/// index order is independent of scheduling. If trials throw, the exception
/// of the lowest failing trial is rethrown.
template <class Fn>
auto run_trials(std::int64_t trials, std::uint64_t master, int threads, Fn&& fn)
    -> std::vector<decltype(fn(std::int64_t{}, RngSeed{}))> {
  using Summary = decltype(fn(std::int64_t{}, RngSeed{}));
  std::vector<Summary> out(static_cast<std::size_t>(trials));
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(trials, 1)));

  constexpr std::int64_t kChunk = 64;
  std::atomic<std::int64_t> cursor{0};
  std::mutex error_mutex;
  std::int64_t error_trial = -1;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      const std::int64_t begin = cursor.fetch_add(kChunk);
      if (begin >= trials) return;
      const std::int64_t end = std::min(trials, begin + kChunk);
      for (std::int64_t t = begin; t < end; ++t) {
        try {
          out[static_cast<std::size_t>(t)] =
              fn(t, derive_trial_seed(master, static_cast<std::uint64_t>(t)));
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (error_trial < 0 || t < error_trial) {
            error_trial = t;
            error = std::current_exception();
          }
          return;
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

enum class Experiment {
  kEdgeProb,
  kEdgeCount,
  kDegreeCdf,
  kMaxDegreeExact,
  kMaxDegreeTail,
  kMinDegree,
  kClique,
  kChiEqualsOmega,
  kIndependence,
  kGnpDegrees,
  kModelEquivalence,
  kDotprodEdges,
  kDotprodClustering,
  kDotprodStructure,
  kRigDiameter,
};

std::string_view experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);
const std::vector<Experiment>& all_experiments();
/// Default pass tolerance, in the units of that experiment's discrepancy.
double default_tolerance(Experiment e);

class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration (size, trials, tolerance, options), raised before
/// any trial runs.
class ExperimentConfigError : public ExperimentError {
 public:
  using ExperimentError::ExperimentError;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::kEdgeProb;
  int n = 2;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // default_tolerance when unset
  /// Experiment-specific knobs (p, r, eps, level, lo, hi, exponent, grid,
  /// triples, bfs); unknown keys are rejected.
  std::map<std::string, double> options;
  int threads = 0;
  std::size_t sample_cap = 1'000'000;
};

struct ExperimentReport {
  std::string experiment;
  std::string model;
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> options;  // effective values, defaults filled in
  EstimateWithCI estimate;
  std::optional<double> theory;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_s = 0.0;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
  /// Primary per-trial statistic, first `sample_cap` trials.
  std::vector<double> samples;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace riglab::mc
