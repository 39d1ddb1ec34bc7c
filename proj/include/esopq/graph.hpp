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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esopq {

/// Largest vertex count supported anywhere in the pipeline. Assignments are
/// stored as 32-bit masks and the simulator keeps 2^n amplitudes.
inline constexpr int kMaxVertices = 24;

/// An undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bit i set means vertex i is in the subset (x_i = 1).
struct VertexSubset {
  std::uint32_t bits = 0;

  bool contains(int vertex) const { return (bits >> vertex) & 1U; }
  int size() const { return __builtin_popcount(bits); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;
};

/**
 * Simple undirected graph with an explicit edge order.
 *
 * The edge sequence is part of the value: ESOP expansion walks edges in this
 * order, so two graphs with the same adjacency but different edge orders
 * compile to different (equivalent) cube sets.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph keeping `edges` in the given order. Endpoints are
  /// normalised to u < v. Throws std::invalid_argument on self-loops,
  /// duplicates, out-of-range endpoints, or n outside [1, kMaxVertices].
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  /// Neighbourhood of `vertex` as a bit mask.
  std::uint32_t neighbors(int vertex) const { return adjacency_[vertex]; }

  /// True when both graphs have the same vertex count and adjacency,
  /// irrespective of edge order.
  bool same_adjacency(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);

/// P4 in the labelling x2 - x4 - x1 - x3 with edge order
/// (x2,x4), (x4,x1), (x1,x3), written 0-indexed as (1,3), (0,3), (0,2).
Graph p4_example_graph();

bool is_connected(const Graph& g);

bool is_independent(const Graph& g, VertexSubset s);

struct MisResult {
  int alpha = 0;
  std::vector<VertexSubset> optima;  // ascending by mask
};

/// Exhaustive maximum independent set search over all 2^n subsets.
MisResult brute_force_mis(const Graph& g);

/// Erdos-Renyi G(n, p) with rejection until connected. Edges come out in
/// lexicographic (u, v) order. Deterministic in (n, edge_prob, seed).
/// Throws std::runtime_error after `max_attempts` disconnected draws.
Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed,
                             int max_attempts = 100000);

// graph6 codec ---------------------------------------------------------------

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,           // no bytes at all
    kByteOutOfRange,  // byte outside [63, 126]
    kBadHeader,       // size header unsupported (n = 0, n > kMaxVertices, 126 prefix)
    kBodyLength,      // body byte count disagrees with the header
    kTrailingBits,    // padding bits in the last body byte are not zero
  };

  Graph6Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Decodes one graph6 token. Edges are emitted in graph6 bit order
/// (column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...).
Graph parse_graph6(std::string_view token);

/// Encodes adjacency only; edge order is not representable in graph6.
std::string encode_graph6(const Graph& g);

/// Reads one graph per non-empty line. An optional ">>graph6<<" prefix is
/// accepted. Throws std::runtime_error if the file cannot be opened, or
/// Graph6Error (with the line number in the message) on a bad line.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

}  // namespace esopq
