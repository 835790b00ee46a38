#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "riglab/algorithms.hpp"
#include "riglab/core.hpp"
#include "riglab/montecarlo.hpp"
#include "riglab/oracle.hpp"
#include "riglab/theory.hpp"

namespace riglab::io {

using Json = nlohmann::ordered_json;

/// Malformed input; the message carries the byte offset or JSON path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph: {"n": int, "edges": [[i, j], ...]} with i < j, lexicographic.
Json graph_to_json(const Graph& graph);
Graph graph_from_json(const Json& json);

// Family: {"model", "seed", "stream", "params": {...}, "intervals": [[lo, hi], ...]}.
// Reals are written in shortest round-trip form.
Json family_to_json(const IntervalFamily& family);
IntervalFamily family_from_json(const Json& json);
Json params_to_json(const ModelParams& params);

/// {"n","edges","delta","Delta","omega","chi","alpha","diameter","components"};
/// diameter is null when not computed and "unreachable" when disconnected.
Json stats_to_json(const GraphStats& stats);

Json report_to_json(const mc::ExperimentReport& report);

/// {"num": "...", "den": "..."} with decimal strings (arbitrary size).
Json rational_to_json(const oracle::Rational& value);

/// Parses text, reporting the byte offset on failure.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// "# n <n>" followed by one "i j" line per edge.
std::string to_edgelist(const Graph& graph);

/// Curve CSV "x,F"; with `empirical` non-empty, "x,F_theory,F_empirical".
std::string curve_to_csv(const theory::TheoryCurve& curve,
                         const std::vector<double>& empirical = {});

/// Per-trial samples as "trial,value".
std::string samples_to_csv(const std::vector<double>& samples);
std::vector<double> samples_from_csv(const std::string& text);

/// 17 significant digits.
std::string format_real(double value);

}  // namespace riglab::io
