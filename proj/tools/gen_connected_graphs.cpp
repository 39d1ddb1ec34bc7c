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


// Writes every connected graph on n vertices, one per isomorphism class, as
// graph6 lines sorted lexicographically. Classes are found by canonical
// labelling: colour refinement fixes an invariant ordered partition and the
// canonical code is the smallest adjacency code over orderings that respect
// it. Practical up to n = 9.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "esopq/graph.hpp"

namespace {

using Adjacency = std::vector<std::uint32_t>;

// graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
std::uint64_t code_of(const Adjacency& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1U);
  return code;
}

std::vector<int> refine_colours(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if ((adj[v] >> u) & 1U) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {s, v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank[s] = 0;
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = rank[sig[v].first];
    if (next == colour) break;
    colour = next;
  }
  return colour;
}

std::uint64_t canonical_code(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const std::vector<int> colour = refine_colours(adj);
  std::vector<std::vector<int>> cells(n);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  std::erase_if(cells, [](const auto& c) { return c.empty(); });
  for (auto& c : cells) std::sort(c.begin(), c.end());

  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the permutations of every cell.
  while (true) {
    std::vector<int> order;
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    best = std::min(best, code_of(adj, order));
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      if (std::next_permutation(cells[k].begin(), cells[k].end())) break;
    }
    if (k == cells.size()) break;
  }
  return best;
}

Adjacency from_code(std::uint64_t code, int n) {
  Adjacency adj(n, 0U);
  int bit = n * (n - 1) / 2 - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((code >> bit) & 1U) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
  return adj;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_connected_graphs N   (1 <= N <= 9)\n";
    return 2;
  }
  const int target = std::stoi(argv[1]);
  if (target < 1 || target > 9) {
    std::cerr << "N must be in [1, 9]\n";
    return 2;
  }

  std::set<std::uint64_t> level{0};  // the single graph on one vertex
  for (int k = 1; k < target; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Adjacency base = from_code(code, k);
      for (std::uint32_t s = 0; s < (1U << k); ++s) {
        Adjacency adj = base;
        adj.push_back(s);
        for (int v = 0; v < k; ++v)
          if ((s >> v) & 1U) adj[v] |= 1U << k;
        next.insert(canonical_code(adj));
      }
    }
    level.swap(next);
  }

  std::vector<std::string> lines;
  for (std::uint64_t code : level) {
    const Adjacency adj = from_code(code, target);
    std::vector<esopq::Edge> edges;
    for (int j = 1; j < target; ++j)
      for (int i = 0; i < j; ++i)
        if ((adj[i] >> j) & 1U) edges.push_back({i, j});
    const esopq::Graph g(target, std::move(edges));
    if (esopq::is_connected(g)) lines.push_back(esopq::encode_graph6(g));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& line : lines) std::cout << line << '\n';
  return 0;
}
