#include "riglab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace riglab::io {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& json, const char* key, const std::string& where) {
  if (!json.is_object()) fail(where, "expected an object");
  auto it = json.find(key);
  if (it == json.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& json, const std::string& where) {
  if (!json.is_number_integer()) fail(where, "expected an integer");
  return json.get<int>();
}

double as_real(const Json& json, const std::string& where) {
  if (!json.is_number()) fail(where, "expected a number");
  return json.get<double>();
}

ModelParams params_from_json(const std::string& model, const Json& params) {
  const std::string where = "params";
  const int n = as_int(field(params, "n", where), where + ".n");
  if (model == "scheinerman") return ScheinermanParams{n};
  if (model == "matching") return MatchingParams{n};
  if (model == "prisner") return PrisnerParams{n, as_real(field(params, "m", where), "params.m")};
  if (model == "custom") return CustomParams{n};
  fail("model", "\"" + model + "\" does not describe an interval family");
}

}  // namespace

Json graph_to_json(const Graph& graph) {
  Json edges = Json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return Json{{"n", graph.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& json) {
  const int n = as_int(field(json, "n", "graph"), "n");
  if (n < 0) fail("n", "must be non-negative");
  const Json& edges = field(json, "edges", "graph");
  if (!edges.is_array()) fail("edges", "expected an array");
  Graph::Builder builder(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const Json& e = edges[k];
    if (!e.is_array() || e.size() != 2) fail(where, "expected [i, j]");
    const int u = as_int(e[0], where);
    const int v = as_int(e[1], where);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) fail(where, "invalid vertex pair");
    builder.add_edge(u, v);
  }
  return std::move(builder).build();
}

Json params_to_json(const ModelParams& params) {
  return std::visit(Overloaded{
                        [](const PrisnerParams& p) { return Json{{"n", p.n}, {"m", p.m}}; },
                        [](const GnpParams& p) { return Json{{"n", p.n}, {"p", p.p}}; },
                        [](const DotProductParams& p) {
                          return Json{{"n", p.n}, {"r", p.r}, {"d", p.dimension}};
                        },
                        [](const auto& p) { return Json{{"n", p.n}}; },
                    },
                    params);
}

Json family_to_json(const IntervalFamily& family) {
  Json intervals = Json::array();
  for (const auto& iv : family) intervals.push_back({iv.lo, iv.hi});
  return Json{{"model", std::string(model_name(family.params()))},
              {"seed", family.seed().master},
              {"stream", family.seed().stream},
              {"params", params_to_json(family.params())},
              {"intervals", std::move(intervals)}};
}

IntervalFamily family_from_json(const Json& json) {
  const Json& model = field(json, "model", "family");
  if (!model.is_string()) fail("model", "expected a string");
  const Json& seed = field(json, "seed", "family");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    fail("seed", "expected an unsigned integer");
  }
  RngSeed rng_seed{seed.get<std::uint64_t>(), 0};
  if (auto it = json.find("stream"); it != json.end()) {
    if (!it->is_number_unsigned()) fail("stream", "expected an unsigned integer");
    rng_seed.stream = it->get<std::uint64_t>();
  }
  const auto params = params_from_json(model.get<std::string>(), field(json, "params", "family"));
  const Json& list = field(json, "intervals", "family");
  if (!list.is_array()) fail("intervals", "expected an array");
  std::vector<Interval> intervals;
  intervals.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "intervals[" + std::to_string(k) + "]";
    const Json& iv = list[k];
    if (!iv.is_array() || iv.size() != 2) fail(where, "expected [lo, hi]");
    intervals.push_back(make_interval(as_real(iv[0], where), as_real(iv[1], where)));
  }
  const bool ties = std::holds_alternative<PrisnerParams>(params) ||
                    std::holds_alternative<CustomParams>(params);
  try {
    return IntervalFamily(std::move(intervals), params, rng_seed,
                          ties ? EndpointPolicy::kAllowTies : EndpointPolicy::kDistinct);
  } catch (const DomainError& e) {
    fail("family", e.what());
  }
}

Json stats_to_json(const GraphStats& s) {
  auto optional_int = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  Json diameter = nullptr;
  if (s.diameter_computed) diameter = s.diameter ? Json(*s.diameter) : Json("unreachable");
  return Json{{"n", s.n},
              {"edges", s.edges},
              {"delta", s.min_degree},
              {"Delta", s.max_degree},
              {"omega", optional_int(s.omega)},
              {"chi", optional_int(s.chi)},
              {"alpha", optional_int(s.alpha)},
              {"diameter", diameter},
              {"components", s.components}};
}

Json report_to_json(const mc::ExperimentReport& r) {
  Json options = Json::object();
  for (const auto& [key, value] : r.options) options[key] = value;
  return Json{{"experiment", r.experiment},
              {"model", r.model},
              {"n", r.n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"options", std::move(options)},
              {"estimate",
               {{"point", r.estimate.point},
                {"ci_low", r.estimate.ci_low},
                {"ci_high", r.estimate.ci_high},
                {"level", r.estimate.level}}},
              {"theory", r.theory ? Json(*r.theory) : Json(nullptr)},
              {"discrepancy", r.discrepancy},
              {"tolerance", r.tolerance},
              {"pass", r.pass},
              {"extras", r.extras},
              {"wall_time_s", r.wall_time_s}};
}

Json rational_to_json(const oracle::Rational& value) {
  return Json{{"num", boost::multiprecision::numerator(value).str()},
              {"den", boost::multiprecision::denominator(value).str()}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string to_edgelist(const Graph& graph) {
  std::ostringstream os;
  os << "# n " << graph.size() << '\n';
  for (auto [u, v] : graph.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string curve_to_csv(const theory::TheoryCurve& curve, const std::vector<double>& empirical) {
  std::ostringstream os;
  if (empirical.empty()) {
    os << "x,F\n";
    for (auto [x, f] : curve.points) os << format_real(x) << ',' << format_real(f) << '\n';
    return os.str();
  }
  const mc::EmpiricalCdf ecdf(empirical);
  os << "x,F_theory,F_empirical\n";
  for (auto [x, f] : curve.points) {
    os << format_real(x) << ',' << format_real(f) << ',' << format_real(ecdf(x)) << '\n';
  }
  return os.str();
}

std::string samples_to_csv(const std::vector<double>& samples) {
  std::ostringstream os;
  os << "trial,value\n";
  for (std::size_t t = 0; t < samples.size(); ++t) os << t << ',' << format_real(samples[t]) << '\n';
  return os.str();
}

std::vector<double> samples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> out;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("trial", 0) == 0) continue;
    const auto comma = line.find(',');
    const std::string value = comma == std::string::npos ? line : line.substr(comma + 1);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(value, &used));
      if (used != value.size() && value.find_first_not_of(" \r", used) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      throw ParseError("samples line " + std::to_string(line_no) + ": not a number");
    }
  }
  if (out.empty()) throw ParseError("samples file holds no values");
  return out;
}

}  // namespace riglab::io
