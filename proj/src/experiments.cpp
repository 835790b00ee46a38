#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "riglab/algorithms.hpp"
#include "riglab/generators.hpp"
#include "riglab/montecarlo.hpp"
#include "riglab/oracle.hpp"
#include "riglab/theory.hpp"

namespace riglab::mc {

namespace {

struct Entry {
  Experiment id;
  std::string_view name;
  double tolerance;
  std::array<std::string_view, 2> options;  // accepted keys besides "level"
};

// Tolerances are in the units of each experiment's discrepancy (see the
// "discrepancy_kind" extra of the report).
const Entry kExperiments[] = {
    {Experiment::kEdgeProb, "edge-prob", 0.002, {}},
    {Experiment::kEdgeCount, "edge-count", 3.0, {}},
    {Experiment::kDegreeCdf, "degree-cdf", 0.02, {"grid"}},
    {Experiment::kMaxDegreeExact, "max-degree-exact", 0.005, {}},
    {Experiment::kMaxDegreeTail, "max-degree-tail", 0.01, {"exponent"}},
    {Experiment::kMinDegree, "min-degree", 0.05, {"grid"}},
    {Experiment::kClique, "clique", 0.05, {"lo", "hi"}},
    {Experiment::kChiEqualsOmega, "chi-equals-omega", 0.5, {}},
    {Experiment::kIndependence, "independence", 0.038, {}},
    {Experiment::kGnpDegrees, "gnp-degrees", 0.5, {"p", "eps"}},
    {Experiment::kModelEquivalence, "model-equivalence", 0.005, {}},
    {Experiment::kDotprodEdges, "dotprod-edges", 3.0, {"r"}},
    {Experiment::kDotprodClustering, "dotprod-clustering", 0.5, {"r", "triples"}},
    {Experiment::kDotprodStructure, "dotprod-structure", 1.0, {"r"}},
    {Experiment::kRigDiameter, "rig-diameter", 0.01, {"bfs"}},
};

const Entry& entry(Experiment e) {
  for (const auto& x : kExperiments)
    if (x.id == e) return x;
  throw ExperimentError("unknown experiment id");
}

// Reads experiment options, filling in defaults and recording the effective
// value of every key that was consulted.
class Options {
 public:
  explicit Options(const std::map<std::string, double>& given) : given_(given) {}

  double get(const std::string& key, double fallback) {
    auto it = given_.find(key);
    const double v = it == given_.end() ? fallback : it->second;
    used_[key] = v;
    return v;
  }

  /// As get, rejecting values outside [lo, hi].
  double get(const std::string& key, double fallback, double lo, double hi) {
    const double v = get(key, fallback);
    if (!(v >= lo && v <= hi)) {
      throw ExperimentConfigError("option " + key + " must lie in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
    return v;
  }

  const std::map<std::string, double>& used() const { return used_; }

 private:
  const std::map<std::string, double>& given_;
  std::map<std::string, double> used_;
};

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

// Wraps a per-trial body so that any failure names the trial and its seed.
template <class Fn>
auto guarded(Fn fn) {
  return [fn](std::int64_t trial, RngSeed seed) {
    try {
      return fn(trial, seed);
    } catch (const std::exception& e) {
      throw ExperimentError("trial " + std::to_string(trial) + " failed (master seed " +
                            std::to_string(seed.master) + ", stream " + hex(seed.stream) +
                            "): " + e.what());
    }
  };
}

struct Run {
  const ExperimentConfig& cfg;
  Options options;
  double level;
  ExperimentReport& report;

  template <class Fn>
  auto trials(Fn fn) {
    return run_trials(cfg.trials, cfg.seed, cfg.threads, guarded(std::move(fn)));
  }

  void keep_samples(std::vector<double> values) {
    if (values.size() > cfg.sample_cap) values.resize(cfg.sample_cap);
    report.samples = std::move(values);
  }
};

void require_n(const ExperimentConfig& cfg, int lo, int hi = std::numeric_limits<int>::max()) {
  if (cfg.n < lo || cfg.n > hi) {
    throw ExperimentConfigError(std::string(experiment_name(cfg.experiment)) + ": n must lie in [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                          std::to_string(cfg.n));
  }
}

std::vector<double> as_doubles(const std::vector<std::uint8_t>& hits) {
  return {hits.begin(), hits.end()};
}

std::int64_t count_hits(const std::vector<std::uint8_t>& hits) {
  std::int64_t k = 0;
  for (auto h : hits) k += h;
  return k;
}

// Mean with CI plus |mean - theory| measured in standard errors.
void mean_vs_theory_in_se(Run& run, std::vector<double> values, double theory) {
  auto& rep = run.report;
  const auto m = sample_moments(values);
  const double se = std::sqrt(m.variance / static_cast<double>(m.count));
  rep.estimate = estimate_mean(values, run.level);
  rep.theory = theory;
  const double gap = std::abs(m.mean - theory);
  rep.discrepancy = se > 0.0 ? gap / se : (gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  rep.extras["discrepancy_kind"] = "standard_errors";
  rep.extras["standard_error"] = se;
  rep.extras["sample_variance"] = m.variance;
  run.keep_samples(std::move(values));
}

void edge_prob(Run& run) {
  require_n(run.cfg, 2);
  const int n = run.cfg.n;
  auto hits = run.trials([n](std::int64_t, RngSeed seed) -> std::uint8_t {
    const auto family = gen_scheinerman(n, seed);
    return intervals_intersect(family[0], family[1]);
  });
  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_proportion(count_hits(hits), run.cfg.trials, run.level);
  rep.theory = theory::edge_probability();
  rep.discrepancy = std::abs(rep.estimate.point - *rep.theory);
  auto values = as_doubles(hits);
  rep.extras["discrepancy_kind"] = "absolute";
  rep.extras["sample_variance"] = sample_moments(values).variance;
  rep.extras["theory_variance"] = 2.0 / 9.0;
  run.keep_samples(std::move(values));
}

void edge_count(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  auto counts = run.trials([n](std::int64_t, RngSeed seed) {
    return static_cast<double>(interval_edge_count(gen_scheinerman(n, seed)));
  });
  run.report.model = "scheinerman";
  const double n3 = std::pow(static_cast<double>(n), 3.0);
  const double variance = sample_moments(counts).variance;
  mean_vs_theory_in_se(run, std::move(counts), theory::expected_edges(n));
  run.report.extras["variance_over_n3"] = variance / n3;
  run.report.extras["theory_variance_over_n3"] = theory::edge_count_variance(n) / n3;
  run.report.extras["limit_variance_over_n3"] = theory::edge_variance_coefficient();
}

void cdf_experiment(Run& run, std::vector<double> values, const std::function<double(double)>& law,
                    std::pair<double, double> domain, double theory_mean) {
  auto& rep = run.report;
  const int grid = static_cast<int>(run.options.get("grid", 1001, 2, 1e7));
  const EmpiricalCdf ecdf(values);
  domain.second = std::max(domain.second, ecdf.sorted_values().back());
  rep.estimate = estimate_mean(values, run.level);
  rep.theory = theory_mean;
  rep.discrepancy = ks_distance(ecdf, law, grid, domain);
  rep.extras["discrepancy_kind"] = "ks_distance";
  rep.extras["samples_used"] = values.size();
  run.keep_samples(std::move(values));
}

void degree_cdf(Run& run) {
  require_n(run.cfg, 2);
  const int n = run.cfg.n;
  auto values = run.trials([n](std::int64_t, RngSeed seed) {
    return interval_degree(gen_scheinerman(n, seed), 0) / static_cast<double>(n);
  });
  run.report.model = "scheinerman";
  cdf_experiment(run, std::move(values), theory::degree_cdf_limit, {0.0, 1.0},
                 theory::degree_limit_mean());
}

void max_degree_exact(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  auto hits = run.trials([n](std::int64_t, RngSeed seed) -> std::uint8_t {
    return interval_has_universal_vertex(gen_scheinerman(n, seed));
  });
  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_proportion(count_hits(hits), run.cfg.trials, run.level);
  rep.theory = 2.0 / 3.0;
  rep.discrepancy = std::abs(rep.estimate.point - *rep.theory);
  rep.extras["discrepancy_kind"] = "absolute";
  run.keep_samples(as_doubles(hits));
}

void max_degree_tail(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  const double exponent = run.options.get("exponent", 0.6, 0.0, 1.0);
  const double threshold = n - std::pow(static_cast<double>(n), exponent);
  auto hits = run.trials([n, threshold](std::int64_t, RngSeed seed) -> std::uint8_t {
    const auto degrees = interval_degrees(gen_scheinerman(n, seed));
    return *std::max_element(degrees.begin(), degrees.end()) >= threshold;
  });
  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_proportion(count_hits(hits), run.cfg.trials, run.level);
  rep.theory = 1.0;
  rep.discrepancy = 1.0 - rep.estimate.point;
  rep.extras["discrepancy_kind"] = "shortfall_from_one";
  rep.extras["threshold"] = threshold;
  run.keep_samples(as_doubles(hits));
}

void min_degree(Run& run) {
  require_n(run.cfg, 2);
  const int n = run.cfg.n;
  const double root_n = std::sqrt(static_cast<double>(n));
  auto values = run.trials([n, root_n](std::int64_t, RngSeed seed) {
    const auto degrees = interval_degrees(gen_scheinerman(n, seed));
    return *std::min_element(degrees.begin(), degrees.end()) / root_n;
  });
  run.report.model = "scheinerman";
  cdf_experiment(run, std::move(values), theory::min_degree_cdf_limit, {0.0, 6.0},
                 theory::min_degree_limit_mean());
}

void clique(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  const double lo = run.options.get("lo", 0.49, 0.0, 1.0);
  const double hi = run.options.get("hi", 0.54, 0.0, 1.0);
  struct Trial {
    int omega = 0;
    int chi = 0;
  };
  auto results = run.trials([n](std::int64_t, RngSeed seed) {
    const auto family = gen_scheinerman(n, seed);
    return Trial{clique_number(family), greedy_coloring(family).colors};
  });
  std::vector<double> ratios;
  std::int64_t inside = 0;
  std::int64_t chi_match = 0;
  for (const auto& t : results) {
    const double ratio = t.omega / static_cast<double>(n);
    ratios.push_back(ratio);
    if (ratio >= lo && ratio <= hi) ++inside;
    if (t.chi == t.omega) ++chi_match;
  }
  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_mean(ratios, run.level);
  rep.theory = 0.5;
  rep.discrepancy = 1.0 - static_cast<double>(inside) / static_cast<double>(run.cfg.trials);
  rep.extras["discrepancy_kind"] = "fraction_outside_bracket";
  rep.extras["in_bracket"] = inside;
  rep.extras["chi_equals_omega"] = chi_match;
  rep.extras["min_ratio"] = *std::min_element(ratios.begin(), ratios.end());
  rep.extras["max_ratio"] = *std::max_element(ratios.begin(), ratios.end());
  run.keep_samples(std::move(ratios));
}

void chi_equals_omega(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  auto gaps = run.trials([n](std::int64_t, RngSeed seed) {
    const auto family = gen_scheinerman(n, seed);
    return static_cast<double>(greedy_coloring(family).colors - clique_number(family));
  });
  std::int64_t equal = 0;
  for (double g : gaps) equal += g == 0.0;
  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_proportion(equal, run.cfg.trials, run.level);
  rep.theory = 1.0;
  rep.discrepancy = static_cast<double>(run.cfg.trials - equal);
  rep.extras["discrepancy_kind"] = "violating_trials";
  run.keep_samples(std::move(gaps));
}

void independence(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  const double root_n = std::sqrt(static_cast<double>(n));
  auto values = run.trials([n, root_n](std::int64_t, RngSeed seed) {
    return independence_number(gen_scheinerman(n, seed)).size() / root_n;
  });
  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_mean(values, run.level);
  rep.theory = theory::independence_constant();
  rep.discrepancy = std::abs(rep.estimate.point - *rep.theory);
  rep.extras["discrepancy_kind"] = "absolute";
  run.keep_samples(std::move(values));
}

void gnp_degrees(Run& run) {
  require_n(run.cfg, 2);
  const int n = run.cfg.n;
  const double p = run.options.get("p", 2.0 / 3.0, 0.0, 1.0);
  const double eps = run.options.get("eps", 0.1, 0.0, 1.0);
  const double lo = (p - eps) * n;
  const double hi = (p + eps) * n;
  struct Trial {
    std::uint8_t inside = 0;
    int min = 0;
    int max = 0;
  };
  auto results = run.trials([=](std::int64_t, RngSeed seed) {
    const auto summary = degree_summary(gen_gnp(n, p, seed));
    return Trial{static_cast<std::uint8_t>(summary.min >= lo && summary.max <= hi), summary.min,
                 summary.max};
  });
  std::int64_t inside = 0;
  int min_degree = n;
  int max_degree = 0;
  std::vector<double> values;
  for (const auto& t : results) {
    inside += t.inside;
    min_degree = std::min(min_degree, t.min);
    max_degree = std::max(max_degree, t.max);
    values.push_back(t.inside);
  }
  auto& rep = run.report;
  rep.model = "gnp";
  rep.estimate = estimate_proportion(inside, run.cfg.trials, run.level);
  rep.theory = 1.0;
  rep.discrepancy = static_cast<double>(run.cfg.trials - inside);
  rep.extras["discrepancy_kind"] = "violating_trials";
  rep.extras["bracket_low"] = lo;
  rep.extras["bracket_high"] = hi;
  rep.extras["min_degree_over_n"] = min_degree / static_cast<double>(n);
  rep.extras["max_degree_over_n"] = max_degree / static_cast<double>(n);
  run.keep_samples(std::move(values));
}

void model_equivalence(Run& run) {
  require_n(run.cfg, 1, oracle::kMaxMatchingN);
  const int n = run.cfg.n;
  auto counts = run.trials([n](std::int64_t, RngSeed seed) {
    return static_cast<double>(interval_edge_count(gen_scheinerman(n, seed)));
  });
  const auto exact = oracle::exact_edge_count_distribution(n);
  std::map<std::int64_t, std::int64_t> histogram;
  for (double c : counts) ++histogram[static_cast<std::int64_t>(c)];

  std::set<std::int64_t> support;
  for (const auto& [k, p] : exact.outcomes) support.insert(k);
  for (const auto& [k, c] : histogram) support.insert(k);

  auto& rep = run.report;
  nlohmann::ordered_json empirical = nlohmann::ordered_json::object();
  nlohmann::ordered_json reference = nlohmann::ordered_json::object();
  double worst = 0.0;
  for (auto k : support) {
    const auto it = histogram.find(k);
    const double p_hat = it == histogram.end()
                             ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(run.cfg.trials);
    const double p = static_cast<double>(exact.probability(k));
    worst = std::max(worst, std::abs(p_hat - p));
    empirical[std::to_string(k)] = p_hat;
    reference[std::to_string(k)] = p;
  }
  rep.model = "scheinerman-vs-matching";
  rep.estimate = estimate_mean(counts, run.level);
  rep.theory = static_cast<double>(exact.mean());
  rep.discrepancy = worst;
  rep.extras["discrepancy_kind"] = "max_abs_probability_gap";
  rep.extras["empirical"] = empirical;
  rep.extras["exact"] = reference;
  run.keep_samples(std::move(counts));
}

void dotprod_edges(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  const double r = run.options.get("r", 1.0, 0.0, 1e6);
  auto counts = run.trials([n, r](std::int64_t, RngSeed seed) {
    return static_cast<double>(gen_dot_product(n, r, seed).graph.edge_count());
  });
  run.report.model = "dotprod";
  const double pairs = n * (n - 1.0) / 2.0;
  mean_vs_theory_in_se(run, std::move(counts), pairs * theory::dot_edge_probability(r));
}

void dotprod_clustering(Run& run) {
  require_n(run.cfg, 3);
  const int n = run.cfg.n;
  const double r = run.options.get("r", 1.0, 0.0, 1e6);
  const double total = run.options.get("triples", 1e6, 1.0, 1e10);
  const auto per_trial = static_cast<std::int64_t>(
      std::ceil(total / static_cast<double>(run.cfg.trials)));
  struct Trial {
    std::int64_t triples = 0;
    std::int64_t ac = 0;
    std::int64_t path = 0;     // a ~ b and b ~ c
    std::int64_t closed = 0;   // path and a ~ c
  };
  auto results = run.trials([=](std::int64_t, RngSeed seed) {
    const auto g = gen_dot_product(n, r, seed).graph;
    // Triples come from a second stream so the graph itself matches `gen`.
    Rng rng(RngSeed{seed.master, mix64(seed.stream + 1)});
    const auto un = static_cast<std::uint64_t>(n);
    Trial t;
    t.triples = per_trial;
    for (std::int64_t i = 0; i < per_trial; ++i) {
      const int a = static_cast<int>(rng.uniform_below(un));
      int b = static_cast<int>(rng.uniform_below(un - 1));
      if (b >= a) ++b;
      int c;
      do {
        c = static_cast<int>(rng.uniform_below(un));
      } while (c == a || c == b);
      const bool ac = g.adjacent(a, c);
      t.ac += ac;
      if (g.adjacent(a, b) && g.adjacent(b, c)) {
        ++t.path;
        t.closed += ac;
      }
    }
    return t;
  });
  Trial sum;
  std::vector<double> per_trial_gap;
  for (const auto& t : results) {
    sum.triples += t.triples;
    sum.ac += t.ac;
    sum.path += t.path;
    sum.closed += t.closed;
    const double conditional = t.path > 0 ? static_cast<double>(t.closed) / static_cast<double>(t.path) : 0.0;
    per_trial_gap.push_back(conditional - static_cast<double>(t.ac) / static_cast<double>(t.triples));
  }
  if (sum.path == 0) throw ExperimentError("dotprod-clustering: no sampled triple formed a path");
  auto& rep = run.report;
  rep.model = "dotprod";
  rep.estimate = estimate_difference(sum.closed, sum.path, sum.ac, sum.triples, run.level);
  rep.theory = theory::dot_conditional_edge_probability(r) - theory::dot_edge_probability(r);
  rep.discrepancy = rep.estimate.ci_low > 0.0 ? 0.0 : 1.0;
  rep.extras["discrepancy_kind"] = "zero_if_ci_strictly_positive";
  rep.extras["sampled_triples"] = sum.triples;
  rep.extras["path_triples"] = sum.path;
  rep.extras["p_conditional"] = static_cast<double>(sum.closed) / static_cast<double>(sum.path);
  rep.extras["p_unconditional"] = static_cast<double>(sum.ac) / static_cast<double>(sum.triples);
  rep.extras["theory_conditional"] = theory::dot_conditional_edge_probability(r);
  rep.extras["theory_unconditional"] = theory::dot_edge_probability(r);
  run.keep_samples(std::move(per_trial_gap));
}

void dotprod_structure(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  const double r = run.options.get("r", 1.0, 0.0, 1e6);
  struct Trial {
    int isolated = 0;
    int giant = 0;
    int giant_diameter = 0;
    std::vector<int> degree_counts;
  };
  auto results = run.trials([n, r](std::int64_t, RngSeed seed) {
    const auto g = gen_dot_product(n, r, seed).graph;
    Trial t;
    const auto components = connected_components(g);
    const std::vector<int>* largest = &components.front();
    for (const auto& c : components) {
      if (c.size() == 1) ++t.isolated;
      if (c.size() > largest->size()) largest = &c;
    }
    t.giant = static_cast<int>(largest->size());
    t.giant_diameter = diameter(induced_subgraph(g, *largest)).value_or(-1);
    t.degree_counts.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++t.degree_counts[static_cast<std::size_t>(g.degree(v))];
    return t;
  });

  std::vector<double> isolated;
  std::vector<double> giant_fraction;
  std::vector<double> giant_diameter;
  std::vector<std::int64_t> degree_counts(static_cast<std::size_t>(n), 0);
  std::int64_t within_six = 0;
  for (const auto& t : results) {
    isolated.push_back(t.isolated);
    giant_fraction.push_back(t.giant / static_cast<double>(n));
    giant_diameter.push_back(t.giant_diameter);
    within_six += t.giant_diameter <= 6;
    for (std::size_t d = 0; d < degree_counts.size(); ++d) degree_counts[d] += t.degree_counts[d];
  }
  // Least-squares slope of log N(d) against log d over observed degrees >= 1.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int points = 0;
  for (std::size_t d = 1; d < degree_counts.size(); ++d) {
    if (degree_counts[d] == 0) continue;
    const double x = std::log(static_cast<double>(d));
    const double y = std::log(static_cast<double>(degree_counts[d]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++points;
  }
  const double slope = points >= 2 ? (points * sxy - sx * sy) / (points * sxx - sx * sx)
                                   : std::numeric_limits<double>::quiet_NaN();

  auto& rep = run.report;
  rep.model = "dotprod";
  rep.estimate = estimate_mean(isolated, run.level);
  rep.theory = std::nullopt;
  rep.discrepancy = 0.0;
  rep.extras["discrepancy_kind"] = "report_only";
  rep.extras["mean_isolated"] = sample_moments(isolated).mean;
  rep.extras["isolated_scale_n_pow"] = r > 0.0 ? std::pow(static_cast<double>(n), (r - 1.0) / r)
                                               : 0.0;
  rep.extras["mean_giant_fraction"] = sample_moments(giant_fraction).mean;
  rep.extras["mean_giant_diameter"] = sample_moments(giant_diameter).mean;
  rep.extras["max_giant_diameter"] = *std::max_element(giant_diameter.begin(), giant_diameter.end());
  rep.extras["giant_diameter_at_most_6"] = within_six;
  if (std::isfinite(slope)) {
    rep.extras["degree_loglog_slope"] = slope;
  } else {
    rep.extras["degree_loglog_slope"] = nullptr;
  }
  run.keep_samples(std::move(isolated));
}

void rig_diameter(Run& run) {
  require_n(run.cfg, 1);
  const int n = run.cfg.n;
  const bool bfs = run.options.get("bfs", 0.0) != 0.0;
  struct Trial {
    int diameter = -1;  // -1: disconnected
    std::uint8_t universal = 0;
  };
  auto results = run.trials([n, bfs](std::int64_t, RngSeed seed) {
    const auto family = gen_scheinerman(n, seed);
    const auto d = bfs ? diameter(graph_from_intervals(family)) : interval_diameter(family);
    return Trial{d.value_or(-1), static_cast<std::uint8_t>(interval_has_universal_vertex(family))};
  });
  std::int64_t two = 0;
  std::int64_t universal = 0;
  std::map<int, std::int64_t> histogram;
  std::vector<double> values;
  for (const auto& t : results) {
    two += t.diameter == 2;
    universal += t.universal;
    ++histogram[t.diameter];
    values.push_back(t.diameter);
  }
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [d, c] : histogram) hist[d < 0 ? std::string("unreachable") : std::to_string(d)] = c;

  auto& rep = run.report;
  rep.model = "scheinerman";
  rep.estimate = estimate_proportion(two, run.cfg.trials, run.level);
  rep.theory = 2.0 / 3.0;
  rep.discrepancy = std::max(0.0, *rep.theory - rep.estimate.point);
  rep.extras["discrepancy_kind"] = "shortfall_below_lower_bound";
  rep.extras["diameter_histogram"] = hist;
  rep.extras["universal_vertex_rate"] =
      static_cast<double>(universal) / static_cast<double>(run.cfg.trials);
  run.keep_samples(std::move(values));
}

}  // namespace

std::string_view experiment_name(Experiment e) { return entry(e).name; }

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto& x : kExperiments)
    if (x.name == name) return x.id;
  return std::nullopt;
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> ids = [] {
    std::vector<Experiment> v;
    for (const auto& x : kExperiments) v.push_back(x.id);
    return v;
  }();
  return ids;
}

double default_tolerance(Experiment e) { return entry(e).tolerance; }

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  if (config.trials < 1) throw ExperimentConfigError("trials must be >= 1");
  const double tolerance = config.tolerance.value_or(default_tolerance(config.experiment));
  if (!(tolerance > 0.0)) throw ExperimentConfigError("tolerance must be > 0");

  ExperimentReport report;
  report.experiment = std::string(experiment_name(config.experiment));
  report.n = config.n;
  report.trials = config.trials;
  report.seed = config.seed;
  report.tolerance = tolerance;

  const auto& allowed = entry(config.experiment).options;
  for (const auto& [key, value] : config.options) {
    if (key != "level" && (key.empty() || std::find(allowed.begin(), allowed.end(), key) == allowed.end())) {
      throw ExperimentConfigError("experiment " + report.experiment + " has no option '" + key + "'");
    }
  }

  Run run{config, Options(config.options), 0.95, report};
  run.level = run.options.get("level", 0.95);
  if (run.level != 0.95 && run.level != 0.99) {
    throw ExperimentConfigError("level must be 0.95 or 0.99");
  }

  switch (config.experiment) {
    case Experiment::kEdgeProb: edge_prob(run); break;
    case Experiment::kEdgeCount: edge_count(run); break;
    case Experiment::kDegreeCdf: degree_cdf(run); break;
    case Experiment::kMaxDegreeExact: max_degree_exact(run); break;
    case Experiment::kMaxDegreeTail: max_degree_tail(run); break;
    case Experiment::kMinDegree: min_degree(run); break;
    case Experiment::kClique: clique(run); break;
    case Experiment::kChiEqualsOmega: chi_equals_omega(run); break;
    case Experiment::kIndependence: independence(run); break;
    case Experiment::kGnpDegrees: gnp_degrees(run); break;
    case Experiment::kModelEquivalence: model_equivalence(run); break;
    case Experiment::kDotprodEdges: dotprod_edges(run); break;
    case Experiment::kDotprodClustering: dotprod_clustering(run); break;
    case Experiment::kDotprodStructure: dotprod_structure(run); break;
    case Experiment::kRigDiameter: rig_diameter(run); break;
  }
  report.options = run.options.used();
  report.pass = report.discrepancy <= report.tolerance;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace riglab::mc
