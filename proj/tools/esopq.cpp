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


// esopq: ESOP-encoded vs QUBO-encoded QAOA for maximum independent set.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esopq/boolean.hpp"
#include "esopq/graph.hpp"
#include "esopq/hamiltonian.hpp"
#include "esopq/harness.hpp"
#include "esopq/optimize.hpp"
#include "esopq/qaoa.hpp"

namespace {

using namespace esopq;

struct OptimizerFlags {
  int grid = 32;
  int restarts = 20;
  int max_evals = 500;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::string strategy = "grid_refine";

  void add(CLI::App* app) {
    app->add_option("--grid", grid, "grid points per axis for the p=1 scan")->capture_default_str();
    app->add_option("--restarts", restarts, "local restarts for p>=2")->capture_default_str();
    app->add_option("--max-evals", max_evals, "evaluation budget per local run")
        ->capture_default_str();
    app->add_option("--tol", tol, "simplex value-spread tolerance")->capture_default_str();
    app->add_option("--seed", seed, "master seed")->capture_default_str();
    app->add_option("--strategy", strategy, "grid_refine | multistart")->capture_default_str();
  }

  OptimizeConfig config() const {
    OptimizeConfig cfg;
    cfg.grid_points = grid;
    cfg.restarts = restarts;
    cfg.max_evals = max_evals;
    cfg.tol = tol;
    cfg.seed = seed;
    cfg.strategy = parse_strategy(strategy);
    return cfg;
  }
};

struct EncodingFlags {
  std::string penalty = "auto";
  double J = 2.0;
  std::string mode = "sign_normalized";
  std::size_t cube_budget = std::size_t{1} << 20;

  void add(CLI::App* app) {
    app->add_option("--penalty", penalty, "ESOP penalty, or auto for 2|V|")->capture_default_str();
    app->add_option("--J", J, "standard-encoding edge penalty (> 1)")->capture_default_str();
    app->add_option("--mode", mode, "ESOP cube sign: sign_normalized | paper_literal")
        ->capture_default_str();
    app->add_option("--cube-budget", cube_budget, "max live cubes during ESOP expansion")
        ->capture_default_str();
  }

  EncodingSettings settings() const {
    EncodingSettings s;
    if (penalty != "auto") s.penalty = std::stod(penalty);
    s.J = J;
    s.mode = parse_cube_sign_mode(mode);
    s.esop.cube_budget = cube_budget;
    return s;
  }
};

struct GraphFlags {
  std::string g6;
  std::string example;

  void add(CLI::App* app) {
    auto* graph = app->add_option("--graph", g6, "graph6 token");
    auto* ex = app->add_option("--example", example, "built-in instance: p4 (fixed edge order)");
    graph->excludes(ex);
    ex->excludes(graph);
  }

  Graph graph() const {
    if (!example.empty()) {
      if (example == "p4") return p4_example_graph();
      throw std::invalid_argument("unknown example '" + example + "'");
    }
    if (g6.empty()) throw std::invalid_argument("one of --graph or --example is required");
    return parse_graph6(g6);
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ESOP vs standard QUBO penalty encodings for QAOA on maximum independent set"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "optimise QAOA for every graph, encoding and layer count");
  std::string graphs_arg, encodings_arg = "esop,standard", layers_arg = "1", out_path = "-",
                          format_arg;
  int threads = 1;
  bool no_timing = false;
  OptimizerFlags run_opt;
  EncodingFlags run_enc;
  run->add_option("--graphs", graphs_arg, "file.g6 or random:n=..,p=..,count=..[,seed=..]")
      ->required();
  run->add_option("--encoding", encodings_arg, "comma list of esop,standard")->capture_default_str();
  run->add_option("--layers", layers_arg, "comma list of p values")->capture_default_str();
  run->add_option("--out", out_path, "output file (- for stdout)")->capture_default_str();
  run->add_option("--format", format_arg, "csv | json (default: from extension, else csv)");
  run->add_option("--threads", threads, "worker threads")->capture_default_str();
  run->add_flag("--no-timing", no_timing, "write wall_ms = 0 for byte-reproducible output");
  run_opt.add(run);
  run_enc.add(run);

  // summarize
  auto* summarize_cmd = app.add_subcommand("summarize", "aggregate a results CSV by (n, p)");
  std::string summary_in;
  summarize_cmd->add_option("results", summary_in, "results CSV")->required();

  // histogram
  auto* hist = app.add_subcommand("histogram", "optimise one instance and sample measurements");
  GraphFlags hist_graph;
  OptimizerFlags hist_opt;
  EncodingFlags hist_enc;
  std::string hist_encoding = "esop", hist_out = "-", hist_svg, hist_state;
  int hist_layers = 1;
  std::uint64_t shots = 1024;
  hist_graph.add(hist);
  hist->add_option("--encoding", hist_encoding, "esop | standard")->capture_default_str();
  hist->add_option("--layers", hist_layers, "p")->capture_default_str();
  hist->add_option("--shots", shots, "measurement shots")->capture_default_str();
  hist->add_option("--out", hist_out, "histogram CSV (- for stdout)")->capture_default_str();
  hist->add_option("--svg", hist_svg, "also write an SVG bar chart");
  hist->add_option("--dump-state", hist_state, "write index,probability of the final state");
  hist_opt.add(hist);
  hist_enc.add(hist);

  // dump-esop
  auto* dump_esop_cmd = app.add_subcommand("dump-esop", "print the violation ESOP cubes");
  GraphFlags esop_graph;
  std::size_t esop_budget = std::size_t{1} << 20;
  esop_graph.add(dump_esop_cmd);
  dump_esop_cmd->add_option("--cube-budget", esop_budget, "max live cubes")->capture_default_str();

  // dump-hamiltonian
  auto* dump_ham = app.add_subcommand("dump-hamiltonian", "print the cost Hamiltonian terms");
  GraphFlags ham_graph;
  EncodingFlags ham_enc;
  std::string ham_encoding = "esop";
  ham_graph.add(dump_ham);
  ham_enc.add(dump_ham);
  dump_ham->add_option("--encoding", ham_encoding, "esop | standard")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      ExperimentConfig cfg;
      cfg.optimizer = run_opt.config();
      cfg.source = parse_graph_source(graphs_arg, cfg.optimizer.seed);
      cfg.encodings.clear();
      for (const auto& e : split_list(encodings_arg)) cfg.encodings.push_back(parse_encoding(e));
      cfg.layers.clear();
      for (const auto& p : split_list(layers_arg)) cfg.layers.push_back(std::stoi(p));
      cfg.encoding = run_enc.settings();
      cfg.threads = threads;
      cfg.record_timing = !no_timing;

      OutputFormat format = OutputFormat::kCsv;
      if (format_arg == "json" ||
          (format_arg.empty() && out_path.size() > 5 &&
           out_path.substr(out_path.size() - 5) == ".json")) {
        format = OutputFormat::kJson;
      } else if (!format_arg.empty() && format_arg != "csv") {
        throw std::invalid_argument("unknown format '" + format_arg + "'");
      }

      const auto records = run_experiment(cfg);
      const auto meta = run_metadata(cfg);
      if (out_path == "-") {
        std::cout << (format == OutputFormat::kCsv ? format_csv(records, meta)
                                                   : format_json(records, meta));
      } else {
        write_results(out_path, format, records, meta);
        std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
      }
    } else if (*summarize_cmd) {
      std::cout << format_summary(summarize(read_results_csv(summary_in)));
    } else if (*hist) {
      const Graph g = hist_graph.graph();
      const auto report = histogram_report(g, parse_encoding(hist_encoding), hist_layers, shots,
                                           hist_opt.seed, hist_enc.settings(), hist_opt.config());
      write_text(hist_out, format_histogram_csv(report));
      if (!hist_svg.empty()) {
        write_text(hist_svg, format_histogram_svg(report, hist_encoding + " p=" +
                                                              std::to_string(hist_layers) + " " +
                                                              std::to_string(shots) + " shots"));
      }
      if (!hist_state.empty()) write_text(hist_state, dump_state(report.state));
      const auto ar = approximation_ratio(report.optimum.best_exp, report.cost.diagonal);
      std::cerr << "best_exp=" << report.optimum.best_exp
                << " ar=" << (ar ? std::to_string(*ar) : std::string("undefined")) << "\n";
    } else if (*dump_esop_cmd) {
      EsopOptions options;
      options.cube_budget = esop_budget;
      std::cout << dump_esop(violation_esop(esop_graph.graph(), options));
    } else if (*dump_ham) {
      const Graph g = ham_graph.graph();
      std::cout << dump_hamiltonian(
          compile_cost(g, parse_encoding(ham_encoding), ham_enc.settings()).hamiltonian);
    }
  } catch (const std::exception& e) {
    std::cerr << "esopq: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
