#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "riglab/algorithms.hpp"
#include "riglab/generators.hpp"
#include "riglab/io.hpp"
#include "riglab/montecarlo.hpp"
#include "riglab/oracle.hpp"
#include "riglab/theory.hpp"

namespace riglab::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kModels = {"scheinerman", "matching", "prisner",
                                          "gnp",         "dotprod",  "threshold"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct GenArgs {
  std::string model;
  int n = 0;
  std::uint64_t seed = 0;
  double m = 1.0;
  double p = 2.0 / 3.0;
  double r = 1.0;
  std::string out;
  std::string format = "json";
};

ModelParams gen_params(const GenArgs& a) {
  if (a.model == "scheinerman") return ScheinermanParams{a.n};
  if (a.model == "matching") return MatchingParams{a.n};
  if (a.model == "prisner") return PrisnerParams{a.n, a.m};
  if (a.model == "gnp") return GnpParams{a.n, a.p};
  if (a.model == "dotprod") return DotProductParams{a.n, a.r};
  return ThresholdParams{a.n};
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const ModelParams params = gen_params(a);
  try {
    validate(params);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const RngSeed seed = derive_trial_seed(a.seed, 0);

  std::string text;
  std::int64_t edges = 0;
  if (is_interval_model(params)) {
    const IntervalFamily family = generate_family(params, seed);
    edges = interval_edge_count(family);
    text = a.format == "json" ? io::family_to_json(family).dump() + "\n"
                              : io::to_edgelist(graph_from_intervals(family));
  } else {
    Graph graph(0);
    std::vector<double> latent;
    if (const auto* dot = std::get_if<DotProductParams>(&params)) {
      auto g = gen_dot_product(dot->n, dot->r, seed, dot->dimension);
      graph = std::move(g.graph);
      latent = std::move(g.latent);
    } else {
      graph = generate_graph(params, seed);
    }
    edges = graph.edge_count();
    if (a.format == "json") {
      Json j{{"model", std::string(model_name(params))},
             {"seed", seed.master},
             {"stream", seed.stream},
             {"params", io::params_to_json(params)}};
      const Json body = io::graph_to_json(graph);
      for (const auto& [key, value] : body.items()) j[key] = value;
      if (!latent.empty()) j["latent"] = latent;
      text = j.dump() + "\n";
    } else {
      text = io::to_edgelist(graph);
    }
  }
  emit(text, a.out, out);
  std::ostream& summary = a.out.empty() ? err : out;
  summary << a.model << " n=" << a.n << " seed=" << a.seed << ": " << edges << " edges"
          << (a.out.empty() ? "" : " -> " + a.out) << "\n";
  return kOk;
}

struct StatsArgs {
  std::string in;
  bool diameter = false;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const Json json = io::parse_json(io::read_file(a.in));
  GraphStats stats;
  if (json.is_object() && json.contains("intervals")) {
    stats = graph_stats(io::family_from_json(json), a.diameter);
  } else {
    stats = graph_stats(io::graph_from_json(json), a.diameter);
  }
  out << io::stats_to_json(stats).dump(2) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string experiment;
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::string out;
  std::string samples_out;
  int threads = 0;
  std::vector<std::string> options;
};

std::string experiment_list() {
  std::string names;
  for (auto e : mc::all_experiments()) {
    if (!names.empty()) names += ", ";
    names += std::string(mc::experiment_name(e));
  }
  return names;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto experiment = mc::parse_experiment(a.experiment);
  if (!experiment) {
    throw UsageError("unknown experiment '" + a.experiment + "'; valid: " + experiment_list());
  }
  mc::ExperimentConfig config;
  config.experiment = *experiment;
  config.n = a.n;
  config.trials = a.trials;
  config.seed = a.seed;
  config.tolerance = a.tolerance;
  config.threads = a.threads;
  for (const auto& kv : a.options) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--option expects key=value, got '" + kv + "'");
    const std::string key = trim(kv.substr(0, eq));
    const std::string value = trim(kv.substr(eq + 1));
    try {
      std::size_t used = 0;
      config.options[key] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("option " + key + ": '" + value + "' is not a number");
    }
  }

  mc::ExperimentReport report;
  try {
    report = mc::run_experiment(config);
  } catch (const mc::ExperimentConfigError& e) {
    throw UsageError(e.what());
  }
  emit(io::report_to_json(report).dump(2) + "\n", a.out, out);
  if (!a.samples_out.empty()) io::write_file(a.samples_out, io::samples_to_csv(report.samples));

  err << report.experiment << " n=" << report.n << " trials=" << report.trials
      << ": estimate " << fixed(report.estimate.point) << " [" << fixed(report.estimate.ci_low)
      << ", " << fixed(report.estimate.ci_high) << "]"
      << ", theory " << (report.theory ? fixed(*report.theory) : std::string("n/a"))
      << ", discrepancy " << fixed(report.discrepancy) << " (tolerance "
      << fixed(report.tolerance) << ") " << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? kOk : kFailure;
}

int cmd_oracle(int n, std::ostream& out) {
  if (n < 1 || n > oracle::kMaxMatchingN) {
    throw UsageError("oracle: n must lie in [1, " + std::to_string(oracle::kMaxMatchingN) + "]");
  }
  const auto dist = oracle::exact_edge_count_distribution(n);
  Json j{{"n", n},
         {"matchings", oracle::matching_count(n)},
         {"p_universal", io::rational_to_json(oracle::exact_prob_universal(n))},
         {"edge_mean", io::rational_to_json(dist.mean())},
         {"edge_var", io::rational_to_json(dist.variance())}};
  out << j.dump(2) << "\n";
  return kOk;
}

struct CurveArgs {
  std::string which;
  int points = 101;
  std::string out;
  std::string empirical;
};

int cmd_curve(const CurveArgs& a, std::ostream& out) {
  const auto curve = theory::tabulate(a.which, a.points);
  std::vector<double> samples;
  if (!a.empirical.empty()) samples = io::samples_from_csv(io::read_file(a.empirical));
  emit(io::curve_to_csv(curve, samples), a.out, out);
  return kOk;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& s) {
    return s == flag || s.rfind(flag + "=", 0) == 0;
  });
}

}  // namespace

std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config expects a file");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  const std::vector<std::string> given = args;
  std::istringstream in(io::read_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    key.erase(0, key.find_first_not_of('-'));
    const std::string flag = "--" + key;
    if (key.empty() || has_flag(given, flag)) continue;
    if (value == "false") continue;
    args.push_back(flag);
    if (value != "true") args.push_back(value);
  }
  return args;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random interval graph laboratory", "riglab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  app.add_option("--config", "Flat key=value file supplying defaults for the subcommand flags");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a random family or graph");
  gen_cmd->add_option("model", gen.model, "Model")->required()->check(CLI::IsMember(kModels));
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--seed", gen.seed, "Master seed")->envname("RIGLAB_SEED");
  gen_cmd->add_option("--m", gen.m, "Prisner window length (>= 1)")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "G(n,p) edge probability")->capture_default_str();
  gen_cmd->add_option("--r", gen.r, "Dot-product exponent")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--format", gen.format, "json or edgelist")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "edgelist"}));

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Summarise a family or graph JSON file");
  stats_cmd->add_option("--in", stats.in, "Input JSON")->required();
  stats_cmd->add_flag("--diameter", stats.diameter, "Also compute the diameter");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a Monte Carlo experiment");
  verify_cmd->add_option("experiment", verify.experiment, "Experiment name")->required();
  verify_cmd->add_option("--n", verify.n, "Number of vertices")->required();
  verify_cmd->add_option("--trials", verify.trials, "Number of trials")->required();
  verify_cmd->add_option("--seed", verify.seed, "Master seed")->envname("RIGLAB_SEED");
  double tolerance = 0.0;
  auto* tolerance_opt =
      verify_cmd->add_option("--tolerance", tolerance, "Override the pass tolerance");
  verify_cmd->add_option("--out", verify.out, "Report file (default stdout)");
  verify_cmd->add_option("--samples-out", verify.samples_out, "Per-trial samples CSV");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--option", verify.options, "Experiment option key=value")
      ->take_all()
      ->allow_extra_args(false);

  int oracle_n = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact results by matching enumeration");
  oracle_cmd->add_option("--n", oracle_n, "Number of intervals")->required();

  CurveArgs curve;
  std::vector<std::string> curve_names;
  for (auto name : theory::curve_names()) curve_names.emplace_back(name);
  auto* curve_cmd = app.add_subcommand("curve", "Tabulate a limit law as CSV");
  curve_cmd->add_option("--which", curve.which, "Curve name")
      ->required()
      ->check(CLI::IsMember(curve_names));
  curve_cmd->add_option("--points", curve.points, "Grid points")
      ->capture_default_str()
      ->check(CLI::Range(2, 10'000'000));
  curve_cmd->add_option("--out", curve.out, "Output file (default stdout)");
  curve_cmd->add_option("--empirical", curve.empirical, "Samples CSV to overlay");

  try {
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*stats_cmd) return cmd_stats(stats, out);
    if (*verify_cmd) {
      if (tolerance_opt->count() > 0) verify.tolerance = tolerance;
      return cmd_verify(verify, out, err);
    }
    if (*oracle_cmd) return cmd_oracle(oracle_n, out);
    if (*curve_cmd) return cmd_curve(curve, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace riglab::cli
