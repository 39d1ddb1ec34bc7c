// Copyright 2026 The esopq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "esopq/boolean.hpp"
#include "esopq/graph.hpp"
#include "esopq/hamiltonian.hpp"
#include "esopq/optimize.hpp"
#include "esopq/qaoa.hpp"

namespace esopq {

enum class Encoding { kEsop, kStandard };

std::string to_string(Encoding e);
Encoding parse_encoding(const std::string& text);

/// Knobs shared by every way of compiling a graph into a cost diagonal.
struct EncodingSettings {
  std::optional<double> penalty;  // ESOP penalty; nullopt = 2|V|
  double J = 2.0;                 // standard QUBO edge penalty
  CubeSignMode mode = CubeSignMode::kSignNormalized;
  EsopOptions esop;
};

struct CompiledCost {
  ZPolynomial hamiltonian;
  DiagonalCost diagonal;
  std::optional<std::size_t> cube_count;  // ESOP only
};

CompiledCost compile_cost(const Graph& g, Encoding encoding, const EncodingSettings& settings);

struct G6FileSource {
  std::filesystem::path path;
};

struct RandomGraphSource {
  int n = 8;
  double edge_prob = 0.5;
  int count = 1;
  std::uint64_t seed = 0;
};

struct GraphListSource {
  std::vector<Graph> graphs;
};

using GraphSource = std::variant<G6FileSource, RandomGraphSource, GraphListSource>;

/// Parses "random:n=8,p=0.5,count=10[,seed=S]" or treats the text as a path.
GraphSource parse_graph_source(const std::string& text, std::uint64_t default_seed);
std::string describe(const GraphSource& source);

std::vector<Graph> load_graphs(const GraphSource& source);

struct ExperimentConfig {
  GraphSource source = GraphListSource{};
  std::vector<Encoding> encodings{Encoding::kEsop, Encoding::kStandard};
  std::vector<int> layers{1};
  EncodingSettings encoding;
  OptimizeConfig optimizer;  // p is overridden per layer; seed is the master seed
  int threads = 1;
  bool record_timing = true;  // false writes wall_ms = 0 for byte-stable output

  /// Throws std::invalid_argument if no encoding or layer is given, a layer
  /// is < 1, threads < 1, or the optimizer/penalty settings are invalid.
  void validate() const;
};

struct ResultRecord {
  std::string graph_id;  // graph6 of the instance
  int n = 0;
  int edge_count = 0;
  Encoding encoding = Encoding::kEsop;
  int p = 1;
  std::optional<double> ar;
  double best_exp = 0.0;
  double c_min = 0.0;
  double c_max = 0.0;
  int alpha = 0;
  std::optional<std::size_t> cube_count;
  int evals = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  /// "ok", "cmin_mismatch" (c_min != -alpha), "degenerate", or "cube_budget_exceeded".
  std::string status = "ok";

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Per-instance seed: depends only on the master seed and the graph6 id.
std::uint64_t instance_seed(std::uint64_t master, const std::string& graph_id);

/// One record per (graph, encoding, p), ordered graph-major. Instances are
/// spread over cfg.threads workers; records do not depend on the thread count.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg);

enum class OutputFormat { kCsv, kJson };

/// Explicit run settings (every default spelled out) plus tool version and
/// timestamp. The timestamp is the only field that varies between runs.
std::map<std::string, std::string> run_metadata(const ExperimentConfig& cfg,
                                                bool include_timestamp = true);

/// CSV: `# key=value` metadata lines, a header, then one row per record.
std::string format_csv(const std::vector<ResultRecord>& records,
                       const std::map<std::string, std::string>& metadata);
std::string format_json(const std::vector<ResultRecord>& records,
                        const std::map<std::string, std::string>& metadata);
void write_results(const std::filesystem::path& path, OutputFormat format,
                   const std::vector<ResultRecord>& records,
                   const std::map<std::string, std::string>& metadata);

std::vector<ResultRecord> parse_csv(const std::string& text);
std::vector<ResultRecord> read_results_csv(const std::filesystem::path& path);

inline constexpr const char* kCsvHeader =
    "graph_id,n,edge_count,encoding,p,ar,best_exp,c_min,c_max,alpha,cube_count,evals,seed,"
    "wall_ms,status";

struct SummaryRow {
  int n = 0;
  int p = 0;
  std::optional<double> mean_standard;
  std::optional<double> mean_esop;
  std::optional<double> pct_change;
  int count_standard = 0;
  int count_esop = 0;
  int excluded = 0;  // rows without a defined AR
};

/// 100 (esop - standard) / standard; nullopt when standard == 0.
std::optional<double> percent_change(double mean_standard, double mean_esop);

/// Groups by (n, p), ascending. Throws std::invalid_argument on empty input.
std::vector<SummaryRow> summarize(const std::vector<ResultRecord>& records);

/// `n,p,count_standard,mean_standard,count_esop,mean_esop,pct_change,excluded`,
/// means to 3 decimals and the percent change to 1 decimal with sign.
std::string format_summary(const std::vector<SummaryRow>& rows);

struct HistogramReport {
  std::vector<std::pair<std::string, std::uint64_t>> counts;  // by count desc, then bitstring
  OptimizeResult optimum;
  StateVector state;
  CompiledCost cost;
};

HistogramReport histogram_report(const Graph& g, Encoding encoding, int p, std::uint64_t shots,
                                 std::uint64_t seed, const EncodingSettings& settings = {},
                                 OptimizeConfig optimizer = {});

/// `bitstring,count` lines, header included.
std::string format_histogram_csv(const HistogramReport& report);

/// Static SVG bar chart of the histogram.
std::string format_histogram_svg(const HistogramReport& report, const std::string& title);

}  // namespace esopq
