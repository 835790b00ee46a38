// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "riglab/algorithms.hpp"
#include "riglab/generators.hpp"
#include "riglab/io.hpp"
#include "riglab/montecarlo.hpp"
#include "riglab/oracle.hpp"
#include "riglab/theory.hpp"

using namespace riglab;
using namespace riglab::mc;
using oracle::Rational;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED " << what << "; ";
    }
  }
};

ExperimentReport run(Experiment e, int n, std::int64_t trials,
                     std::map<std::string, double> options = {}) {
  ExperimentConfig c;
  c.experiment = e;
  c.n = n;
  c.trials = trials;
  c.seed = kSeed;
  c.options = std::move(options);
  c.sample_cap = 0;
  return run_experiment(c);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    const Rational p = oracle::exact_prob_universal(n);
    o.detail << "n=" << n << ": " << p << "; ";
    o.require(p == Rational(2, 3), "exact 2/3 at n=" + std::to_string(n));
  }
  const double s = seconds_since(start);
  o.require(s < 60, "runtime under 60 s");
}

void criterion_2(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Rational exact = oracle::exact_edge_count_distribution(2).mean();
  o.require(exact == Rational(2, 3), "oracle edge probability 2/3");
  const auto r = run(Experiment::kEdgeProb, 2, 1'000'000);
  o.detail << "oracle " << exact << ", estimate " << r.estimate.point << "; ";
  o.require(std::abs(r.estimate.point - 2.0 / 3.0) <= 0.002, "estimate within 0.002");
  o.require(seconds_since(start) < 30, "runtime under 30 s");
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion_3(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto dir = std::filesystem::temp_directory_path() /
                   ("riglab-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (int n : {10, 100, 1000}) {
    const auto out = dir / ("max-degree-" + std::to_string(n) + ".json");
    const std::string command = std::string("\"") + RIGLAB_BINARY +
                                "\" verify max-degree-exact --n " + std::to_string(n) +
                                " --trials 100000 --seed " + std::to_string(kSeed) + " --out \"" +
                                out.string() + "\" 2>/dev/null";
    const int code = shell(command);
    o.require(code == 0 || code == 1, "CLI run at n=" + std::to_string(n));
    if (code != 0 && code != 1) continue;
    const auto report = io::parse_json(io::read_file(out.string()));
    const double p = report["estimate"]["point"].get<double>();
    o.detail << "n=" << n << ": " << p << "; ";
    o.require(std::abs(p - 2.0 / 3.0) <= 0.005, "estimate within 0.005 at n=" + std::to_string(n));
  }
  std::filesystem::remove_all(dir);
  o.require(seconds_since(start) < 600, "runtime under 10 min");
}

void criterion_4(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Rational v3 = oracle::exact_edge_count_distribution(3).variance();
  o.require(v3 == Rational(14, 15), "exact n=3 variance 14/15");
  o.require(std::abs(theory::edge_count_variance(3) - 14.0 / 15.0) < 1e-12,
            "variance formula matches n=3 oracle");
  const auto r = run(Experiment::kEdgeCount, 1000, 1000);
  const double ratio = r.extras["variance_over_n3"].get<double>();
  o.detail << "mean " << r.estimate.point << " (" << r.discrepancy << " SE), var/n^3 " << ratio
           << "; ";
  o.require(r.discrepancy <= 3.0, "mean within 3 SE of 333000");
  o.require(ratio >= 0.03 && ratio <= 0.06, "variance/n^3 in [0.03, 0.06]");
  o.require(seconds_since(start) < 300, "runtime under 5 min");
}

void criterion_5(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run(Experiment::kDegreeCdf, 10'000, 10'000);
  o.detail << "KS " << r.discrepancy << "; ";
  o.require(r.discrepancy <= 0.02, "KS <= 0.02");
  o.require(seconds_since(start) < 600, "runtime under 10 min");
}

void criterion_6(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run(Experiment::kMinDegree, 10'000, 2000);
  o.detail << "KS " << r.discrepancy << "; ";
  o.require(r.discrepancy <= 0.05, "KS <= 0.05");
  o.require(seconds_since(start) < 600, "runtime under 10 min");
}

void criterion_7(Outcome& o) {
  const auto r = run(Experiment::kClique, 10'000, 100);
  const auto inside = r.extras["in_bracket"].get<std::int64_t>();
  const auto equal = r.extras["chi_equals_omega"].get<std::int64_t>();
  o.detail << "omega/n in bracket " << inside << "/100, chi == omega " << equal << "/100; ";
  o.require(inside >= 95, "at least 95 trials in [0.49, 0.54]");
  o.require(equal == 100, "chi == omega in every trial");
}

void criterion_8(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run(Experiment::kIndependence, 100'000, 50);
  o.detail << "mean alpha/sqrt(n) " << r.estimate.point << "; ";
  o.require(r.estimate.point >= 1.09 && r.estimate.point <= 1.17, "mean in [1.09, 1.17]");
  o.require(seconds_since(start) < 300, "runtime under 5 min");
}

void criterion_9(Outcome& o) {
  int agree = 0;
  const int families = 1000;
  for (int t = 0; t < families; ++t) {
    const RngSeed seed = derive_trial_seed(kSeed, static_cast<std::uint64_t>(t));
    const int n = 1 + static_cast<int>(Rng(seed).uniform_below(8));
    const auto f = gen_scheinerman(n, seed);
    const Graph g = graph_from_intervals(f);
    agree += clique_number(f) == oracle::brute_clique(g) &&
             static_cast<int>(independence_number(f).size()) == oracle::brute_independence(g) &&
             chromatic_number(f) == oracle::brute_chromatic(g);
  }
  o.detail << agree << "/" << families << " families agree; ";
  o.require(agree == families, "full agreement");
}

void criterion_10(Outcome& o) {
  const auto r = run(Experiment::kModelEquivalence, 3, 1'000'000);
  o.detail << "max gap " << r.discrepancy << "; ";
  o.require(r.discrepancy <= 0.005, "every probability within 0.005");
}

void criterion_11(Outcome& o) {
  const auto r = run(Experiment::kGnpDegrees, 1000, 100, {{"p", 2.0 / 3.0}, {"eps", 0.1}});
  o.detail << "violating trials " << r.discrepancy << ", degree/n range ["
           << r.extras["min_degree_over_n"].get<double>() << ", "
           << r.extras["max_degree_over_n"].get<double>() << "]; ";
  o.require(r.discrepancy == 0.0, "every degree in bracket in 100/100 trials");
}

void criterion_12(Outcome& o) {
  const auto edges = run(Experiment::kDotprodEdges, 1000, 100, {{"r", 1.0}});
  o.detail << "mean edges " << edges.estimate.point << " (" << edges.discrepancy << " SE); ";
  o.require(edges.discrepancy <= 3.0, "mean edges within 3 SE of C(n,2)/4");

  const auto cluster = run(Experiment::kDotprodClustering, 1000, 100, {{"r", 1.0}, {"triples", 1e6}});
  o.detail << "clustering gap " << cluster.estimate.point << " CI [" << cluster.estimate.ci_low
           << ", " << cluster.estimate.ci_high << "] over "
           << cluster.extras["sampled_triples"].get<std::int64_t>() << " triples; ";
  o.require(cluster.extras["sampled_triples"].get<std::int64_t>() >= 1'000'000, "10^6 triples");
  o.require(cluster.estimate.point > 0.0 && cluster.estimate.ci_low > 0.0, "CI excludes 0");

  const auto structure = run(Experiment::kDotprodStructure, 1000, 100, {{"r", 1.0}});
  o.detail << "reported: mean isolated " << structure.extras["mean_isolated"].get<double>()
           << ", giant diameter mean " << structure.extras["mean_giant_diameter"].get<double>()
           << " max " << structure.extras["max_giant_diameter"] << "; ";
}

void criterion_13(Outcome& o) {
  const auto r = run(Experiment::kRigDiameter, 1000, 10'000);
  o.detail << "P(diam = 2) " << r.estimate.point << ", histogram "
           << r.extras["diameter_histogram"].dump() << "; ";
  o.require(r.estimate.point >= 2.0 / 3.0 - 0.01, "P(diam = 2) >= 2/3 - 0.01");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"exact universal-vertex probability", criterion_1},
      {"edge probability", criterion_2},
      {"max degree via CLI", criterion_3},
      {"edge count", criterion_4},
      {"degree distribution", criterion_5},
      {"minimum degree", criterion_6},
      {"clique and chromatic number", criterion_7},
      {"independence number", criterion_8},
      {"sweep versus brute force", criterion_9},
      {"model equivalence", criterion_10},
      {"G(n,p) degree concentration", criterion_11},
      {"dot-product model", criterion_12},
      {"diameter two", criterion_13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what() << "; ";
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %-36s %s(%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.str().c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
