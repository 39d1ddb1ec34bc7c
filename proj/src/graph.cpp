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


#include "esopq/graph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "esopq/random.hpp"

namespace esopq {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph vertex count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
  adjacency_.assign(n, 0U);
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (has_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    adjacency_[e.u] |= 1U << e.v;
    adjacency_[e.v] |= 1U << e.u;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adjacency_[u] >> v) & 1U;
}

bool Graph::same_adjacency(const Graph& other) const {
  return n_ == other.n_ && adjacency_ == other.adjacency_;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph p4_example_graph() { return Graph(4, {{1, 3}, {0, 3}, {0, 2}}); }

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1U;
  std::uint32_t seen = 1U;
  std::uint32_t frontier = 1U;
  while (frontier != 0U) {
    std::uint32_t next = 0U;
    for (std::uint32_t f = frontier; f != 0U; f &= f - 1U) {
      next |= g.neighbors(__builtin_ctz(f));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool is_independent(const Graph& g, VertexSubset s) {
  for (std::uint32_t rest = s.bits; rest != 0U; rest &= rest - 1U) {
    const int v = __builtin_ctz(rest);
    if (v >= g.num_vertices()) continue;
    if ((g.neighbors(v) & s.bits) != 0U) return false;
  }
  return true;
}

MisResult brute_force_mis(const Graph& g) {
  MisResult result;
  const std::uint32_t count = 1U << g.num_vertices();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const VertexSubset s{mask};
    const int size = s.size();
    if (size < result.alpha || !is_independent(g, s)) continue;
    if (size > result.alpha) {
      result.alpha = size;
      result.optima.clear();
    }
    result.optima.push_back(s);
  }
  return result;
}

Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed, int max_attempts) {
  if (n < 2 || n > kMaxVertices) {
    throw std::invalid_argument("random_connected_graph: n must be in [2, " +
                                std::to_string(kMaxVertices) + "]");
  }
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) {
    throw std::invalid_argument("random_connected_graph: edge_prob must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform01(rng) < edge_prob) edges.push_back({i, j});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_graph: no connected sample after " +
                           std::to_string(max_attempts) + " attempts (edge_prob too low?)");
}

}  // namespace esopq
