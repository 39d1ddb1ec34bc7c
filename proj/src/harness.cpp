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


#include "esopq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "esopq/random.hpp"
#include "json.hpp"

#ifndef ESOPQ_VERSION
#define ESOPQ_VERSION "dev"
#endif

namespace esopq {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string join_layers(const std::vector<int>& layers) {
  std::string out;
  for (int p : layers) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out;
}

ResultRecord evaluate_instance(const Graph& g, const std::string& graph_id, int alpha,
                               Encoding encoding, int p, const CompiledCost& cost,
                               std::uint64_t seed, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ResultRecord rec;
  rec.graph_id = graph_id;
  rec.n = g.num_vertices();
  rec.edge_count = g.num_edges();
  rec.encoding = encoding;
  rec.p = p;
  rec.alpha = alpha;
  rec.seed = seed;
  rec.cube_count = cost.cube_count;
  rec.c_min = cost.diagonal.c_min();
  rec.c_max = cost.diagonal.c_max();

  OptimizeConfig opt = cfg.optimizer;
  opt.p = p;
  opt.seed = derive_seed(seed, static_cast<std::uint64_t>(p) * 2 +
                                   (encoding == Encoding::kEsop ? 0 : 1));
  const OptimizeResult best = optimize_angles(cost.diagonal, opt);
  rec.best_exp = best.best_exp;
  rec.evals = best.evals;
  rec.ar = approximation_ratio(best.best_exp, cost.diagonal);
  if (!rec.ar) {
    rec.status = "degenerate";
  } else if (std::abs(rec.c_min + alpha) > 1e-9) {
    rec.status = "cmin_mismatch";
  }
  if (cfg.record_timing) {
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
  }
  return rec;
}

std::vector<ResultRecord> run_graph(const Graph& g, const ExperimentConfig& cfg) {
  const std::string graph_id = encode_graph6(g);
  const std::uint64_t seed = instance_seed(cfg.optimizer.seed, graph_id);
  const int alpha = brute_force_mis(g).alpha;
  std::vector<ResultRecord> out;
  for (Encoding encoding : cfg.encodings) {
    std::optional<CompiledCost> cost;
    try {
      cost = compile_cost(g, encoding, cfg.encoding);
    } catch (const CubeBudgetExceeded&) {
      for (int p : cfg.layers) {
        ResultRecord rec;
        rec.graph_id = graph_id;
        rec.n = g.num_vertices();
        rec.edge_count = g.num_edges();
        rec.encoding = encoding;
        rec.p = p;
        rec.alpha = alpha;
        rec.seed = seed;
        rec.status = "cube_budget_exceeded";
        out.push_back(rec);
      }
      continue;
    }
    for (int p : cfg.layers) {
      out.push_back(evaluate_instance(g, graph_id, alpha, encoding, p, *cost, seed, cfg));
    }
  }
  return out;
}

}  // namespace

std::string to_string(Encoding e) { return e == Encoding::kEsop ? "esop" : "standard"; }

Encoding parse_encoding(const std::string& text) {
  if (text == "esop") return Encoding::kEsop;
  if (text == "standard") return Encoding::kStandard;
  throw std::invalid_argument("unknown encoding '" + text + "' (expected esop or standard)");
}

CompiledCost compile_cost(const Graph& g, Encoding encoding, const EncodingSettings& settings) {
  if (encoding == Encoding::kEsop) {
    const Esop esop = violation_esop(g, settings.esop);
    const double penalty = settings.penalty.value_or(default_esop_penalty(g));
    ZPolynomial h = esop_cost_hamiltonian(esop, g.num_vertices(), penalty, settings.mode);
    DiagonalCost d = zpoly_to_diagonal(h, g.num_vertices());
    return {std::move(h), std::move(d), esop.size()};
  }
  ZPolynomial h = standard_cost_hamiltonian(g, settings.J);
  DiagonalCost d = zpoly_to_diagonal(h, g.num_vertices());
  return {std::move(h), std::move(d), std::nullopt};
}

GraphSource parse_graph_source(const std::string& text, std::uint64_t default_seed) {
  constexpr std::string_view kPrefix = "random:";
  if (!text.starts_with(kPrefix)) return G6FileSource{text};
  RandomGraphSource src;
  src.seed = default_seed;
  bool have_n = false;
  for (const std::string& kv : split(text.substr(kPrefix.size()), ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad random source field '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "n") {
      src.n = std::stoi(value);
      have_n = true;
    } else if (key == "p") {
      src.edge_prob = std::stod(value);
    } else if (key == "count") {
      src.count = std::stoi(value);
    } else if (key == "seed") {
      src.seed = std::stoull(value);
    } else {
      throw std::invalid_argument("unknown random source key '" + key + "'");
    }
  }
  if (!have_n) throw std::invalid_argument("random source needs n=");
  if (src.count < 1) throw std::invalid_argument("random source needs count >= 1");
  return src;
}

std::string describe(const GraphSource& source) {
  if (const auto* f = std::get_if<G6FileSource>(&source)) return "g6:" + f->path.string();
  if (const auto* r = std::get_if<RandomGraphSource>(&source)) {
    return "random:n=" + std::to_string(r->n) + ",p=" + fmt_double(r->edge_prob) +
           ",count=" + std::to_string(r->count) + ",seed=" + std::to_string(r->seed);
  }
  return "list:" + std::to_string(std::get<GraphListSource>(source).graphs.size());
}

std::vector<Graph> load_graphs(const GraphSource& source) {
  if (const auto* f = std::get_if<G6FileSource>(&source)) return read_graph6_file(f->path);
  if (const auto* r = std::get_if<RandomGraphSource>(&source)) {
    std::vector<Graph> out;
    for (int i = 0; i < r->count; ++i) {
      out.push_back(random_connected_graph(r->n, r->edge_prob,
                                           derive_seed(r->seed, static_cast<std::uint64_t>(i))));
    }
    return out;
  }
  return std::get<GraphListSource>(source).graphs;
}

void ExperimentConfig::validate() const {
  if (encodings.empty()) throw std::invalid_argument("experiment needs at least one encoding");
  if (layers.empty()) throw std::invalid_argument("experiment needs at least one layer count");
  for (int p : layers) {
    if (p < 1) throw std::invalid_argument("layer counts must be >= 1");
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (encoding.penalty && !(*encoding.penalty > 0.0)) {
    throw std::invalid_argument("ESOP penalty must be positive");
  }
  if (std::find(encodings.begin(), encodings.end(), Encoding::kStandard) != encodings.end() &&
      !(encoding.J > 1.0)) {
    throw std::invalid_argument("standard encoding requires J > 1");
  }
  OptimizeConfig opt = optimizer;
  opt.p = 1;
  opt.validate();
}

std::uint64_t instance_seed(std::uint64_t master, const std::string& graph_id) {
  return derive_seed(master, std::string_view(graph_id));
}

std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<Graph> graphs = load_graphs(cfg.source);
  std::vector<std::vector<ResultRecord>> slots(graphs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      slots[i] = run_graph(graphs[i], cfg);
    }
  };
  const int workers = std::min<int>(cfg.threads, static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<ResultRecord> records;
  for (auto& slot : slots) records.insert(records.end(), slot.begin(), slot.end());
  return records;
}

std::map<std::string, std::string> run_metadata(const ExperimentConfig& cfg,
                                                bool include_timestamp) {
  std::map<std::string, std::string> meta;
  meta["tool"] = std::string("esopq ") + ESOPQ_VERSION;
  if (include_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["timestamp"] = buf;
  }
  meta["source"] = describe(cfg.source);
  std::string encs;
  for (Encoding e : cfg.encodings) encs += (encs.empty() ? "" : ",") + to_string(e);
  meta["encodings"] = encs;
  meta["layers"] = join_layers(cfg.layers);
  meta["penalty"] = cfg.encoding.penalty ? fmt_double(*cfg.encoding.penalty) : "auto(2n)";
  meta["J"] = fmt_double(cfg.encoding.J);
  meta["cube_sign_mode"] = to_string(cfg.encoding.mode);
  meta["cube_budget"] = std::to_string(cfg.encoding.esop.cube_budget);
  meta["edge_order"] = std::holds_alternative<RandomGraphSource>(cfg.source)
                           ? "lexicographic"
                           : (std::holds_alternative<G6FileSource>(cfg.source) ? "graph6"
                                                                               : "as_given");
  meta["strategy"] = to_string(cfg.optimizer.strategy);
  meta["grid_points"] = std::to_string(cfg.optimizer.grid_points);
  meta["restarts"] = std::to_string(cfg.optimizer.restarts);
  meta["max_evals"] = std::to_string(cfg.optimizer.max_evals);
  meta["tol"] = fmt_double(cfg.optimizer.tol);
  meta["seed"] = std::to_string(cfg.optimizer.seed);
  meta["gamma_bounds"] = "[-" + fmt_double(cfg.optimizer.gamma_bound) + "," +
                         fmt_double(cfg.optimizer.gamma_bound) + "]";
  meta["beta_bounds"] = "[-" + fmt_double(cfg.optimizer.beta_bound) + "," +
                        fmt_double(cfg.optimizer.beta_bound) + "]";
  meta["expectation"] = "exact_statevector";
  meta["timing"] = cfg.record_timing ? "wall_ms" : "disabled";
  return meta;
}

std::string format_csv(const std::vector<ResultRecord>& records,
                       const std::map<std::string, std::string>& metadata) {
  std::string out;
  for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";
  out += kCsvHeader;
  out += '\n';
  for (const ResultRecord& r : records) {
    out += r.graph_id + ',' + std::to_string(r.n) + ',' + std::to_string(r.edge_count) + ',' +
           to_string(r.encoding) + ',' + std::to_string(r.p) + ',' +
           (r.ar ? fmt_double(*r.ar) : "") + ',' + fmt_double(r.best_exp) + ',' +
           fmt_double(r.c_min) + ',' + fmt_double(r.c_max) + ',' + std::to_string(r.alpha) + ',' +
           (r.cube_count ? std::to_string(*r.cube_count) : "") + ',' + std::to_string(r.evals) +
           ',' + std::to_string(r.seed) + ',' + fmt_double(r.wall_ms) + ',' + r.status + '\n';
  }
  return out;
}

std::string format_json(const std::vector<ResultRecord>& records,
                        const std::map<std::string, std::string>& metadata) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata;
  doc["records"] = nlohmann::ordered_json::array();
  for (const ResultRecord& r : records) {
    nlohmann::ordered_json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["edge_count"] = r.edge_count;
    j["encoding"] = to_string(r.encoding);
    j["p"] = r.p;
    j["ar"] = r.ar ? nlohmann::ordered_json(*r.ar) : nlohmann::ordered_json(nullptr);
    j["best_exp"] = r.best_exp;
    j["c_min"] = r.c_min;
    j["c_max"] = r.c_max;
    j["alpha"] = r.alpha;
    j["cube_count"] =
        r.cube_count ? nlohmann::ordered_json(*r.cube_count) : nlohmann::ordered_json(nullptr);
    j["evals"] = r.evals;
    j["seed"] = r.seed;
    j["wall_ms"] = r.wall_ms;
    j["status"] = r.status;
    doc["records"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

void write_results(const std::filesystem::path& path, OutputFormat format,
                   const std::vector<ResultRecord>& records,
                   const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (format == OutputFormat::kCsv ? format_csv(records, metadata)
                                       : format_json(records, metadata));
}

std::vector<ResultRecord> parse_csv(const std::string& text) {
  std::vector<ResultRecord> records;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 15) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected 15 fields");
    }
    ResultRecord r;
    r.graph_id = f[0];
    r.n = std::stoi(f[1]);
    r.edge_count = std::stoi(f[2]);
    r.encoding = parse_encoding(f[3]);
    r.p = std::stoi(f[4]);
    if (!f[5].empty()) r.ar = std::stod(f[5]);
    r.best_exp = std::stod(f[6]);
    r.c_min = std::stod(f[7]);
    r.c_max = std::stod(f[8]);
    r.alpha = std::stoi(f[9]);
    if (!f[10].empty()) r.cube_count = std::stoull(f[10]);
    r.evals = std::stoi(f[11]);
    r.seed = std::stoull(f[12]);
    r.wall_ms = std::stod(f[13]);
    r.status = f[14];
    records.push_back(std::move(r));
  }
  if (!header_seen) throw std::runtime_error("CSV has no header line");
  return records;
}

std::vector<ResultRecord> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::optional<double> percent_change(double mean_standard, double mean_esop) {
  if (mean_standard == 0.0) return std::nullopt;
  return 100.0 * (mean_esop - mean_standard) / mean_standard;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRecord>& records) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  struct Acc {
    double sum_standard = 0.0, sum_esop = 0.0;
    int count_standard = 0, count_esop = 0, excluded = 0;
  };
  std::map<std::pair<int, int>, Acc> groups;
  for (const ResultRecord& r : records) {
    Acc& acc = groups[{r.n, r.p}];
    if (!r.ar || r.status == "cube_budget_exceeded") {
      ++acc.excluded;
    } else if (r.encoding == Encoding::kEsop) {
      acc.sum_esop += *r.ar;
      ++acc.count_esop;
    } else {
      acc.sum_standard += *r.ar;
      ++acc.count_standard;
    }
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, acc] : groups) {
    SummaryRow row;
    row.n = key.first;
    row.p = key.second;
    row.count_standard = acc.count_standard;
    row.count_esop = acc.count_esop;
    row.excluded = acc.excluded;
    if (acc.count_standard > 0) row.mean_standard = acc.sum_standard / acc.count_standard;
    if (acc.count_esop > 0) row.mean_esop = acc.sum_esop / acc.count_esop;
    if (row.mean_standard && row.mean_esop) {
      row.pct_change = percent_change(*row.mean_standard, *row.mean_esop);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::string out = "n,p,count_standard,mean_standard,count_esop,mean_esop,pct_change,excluded\n";
  char buf[32];
  auto mean = [&](const std::optional<double>& v) -> std::string {
    if (!v) return "";
    std::snprintf(buf, sizeof buf, "%.3f", *v);
    return buf;
  };
  for (const SummaryRow& r : rows) {
    std::string pct = "undefined";
    if (r.pct_change) {
      // Avoid printing "-0.0".
      const double rounded = std::round(*r.pct_change * 10.0) / 10.0;
      std::snprintf(buf, sizeof buf, "%+.1f", rounded == 0.0 ? 0.0 : rounded);
      pct = buf;
    }
    out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',' +
           std::to_string(r.count_standard) + ',' + mean(r.mean_standard) + ',' +
           std::to_string(r.count_esop) + ',' + mean(r.mean_esop) + ',' + pct + ',' +
           std::to_string(r.excluded) + '\n';
  }
  return out;
}

HistogramReport histogram_report(const Graph& g, Encoding encoding, int p, std::uint64_t shots,
                                 std::uint64_t seed, const EncodingSettings& settings,
                                 OptimizeConfig optimizer) {
  CompiledCost cost = compile_cost(g, encoding, settings);
  optimizer.p = p;
  optimizer.seed = seed;
  OptimizeResult optimum = optimize_angles(cost.diagonal, optimizer);
  StateVector state = run_qaoa(cost.diagonal, optimum.params);

  const int n = g.num_vertices();
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  for (const auto& [z, c] : sample_counts(state, shots, derive_seed(seed, "shots"))) {
    counts.emplace_back(bitstring(z, n), c);
  }
  std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return {std::move(counts), std::move(optimum), std::move(state), std::move(cost)};
}

std::string format_histogram_csv(const HistogramReport& report) {
  std::string out = "bitstring,count\n";
  for (const auto& [bits, c] : report.counts) out += bits + ',' + std::to_string(c) + '\n';
  return out;
}

std::string format_histogram_svg(const HistogramReport& report, const std::string& title) {
  // Bars in bitstring order, like a measurement histogram.
  auto bars = report.counts;
  std::sort(bars.begin(), bars.end());
  const double width = 40.0 + 24.0 * static_cast<double>(bars.size());
  const double height = 260.0, base = 200.0, plot_h = 160.0;
  std::uint64_t peak = 1;
  for (const auto& b : bars) peak = std::max(peak, b.second);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"10\">\n";
  svg << "<text x=\"10\" y=\"18\" font-size=\"12\">" << title << "</text>\n";
  double x = 30.0;
  for (const auto& [bits, c] : bars) {
    const double h = plot_h * static_cast<double>(c) / static_cast<double>(peak);
    svg << "<rect x=\"" << x << "\" y=\"" << base - h << "\" width=\"18\" height=\"" << h
        << "\" fill=\"#4a78b5\"/>\n";
    svg << "<text x=\"" << x + 9 << "\" y=\"" << base - h - 3 << "\" text-anchor=\"middle\">" << c
        << "</text>\n";
    svg << "<text transform=\"translate(" << x + 12 << "," << base + 6
        << ") rotate(90)\">" << bits << "</text>\n";
    x += 24.0;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace esopq
