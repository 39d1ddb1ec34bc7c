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


#include <algorithm>
#include <deque>
#include <random>

#include "doctest.h"
#include "esopq/graph.hpp"
#include "esopq/random.hpp"
#include "test_support.hpp"

using namespace esopq;
using esopq::testing::connected_corpus;

namespace {

// Plain BFS over has_edge, independent of Graph::neighbors masks.
bool bfs_connected(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && g.has_edge(u, v)) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), std::invalid_argument);

  const Graph g(3, {{2, 0}, {1, 2}});
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 2});
  CHECK(g.edges()[1] == Edge{1, 2});
}

TEST_CASE("parse_graph6 decodes known tokens") {
  const Graph one = parse_graph6("@");
  CHECK(one.num_vertices() == 1);
  CHECK(one.num_edges() == 0);

  const Graph k4 = parse_graph6("C~");
  CHECK(k4.same_adjacency(complete_graph(4)));
  CHECK(k4.num_edges() == 6);

  const Graph e4 = parse_graph6("C?");
  CHECK(e4.num_vertices() == 4);
  CHECK(e4.num_edges() == 0);

  // networkx.to_graph6_bytes(cycle_graph(5)) == b"Dhc"
  CHECK(parse_graph6("Dhc").same_adjacency(cycle_graph(5)));
  CHECK(parse_graph6(">>graph6<<C~").same_adjacency(k4));
}

TEST_CASE("parse_graph6 emits edges in column-major upper-triangle order") {
  const Graph k4 = parse_graph6("C~");
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(k4.edges() == expected);
}

TEST_CASE("parse_graph6 reports each malformation distinctly") {
  using Kind = Graph6Error::Kind;
  auto kind_of = [](std::string_view token) {
    try {
      parse_graph6(token);
    } catch (const Graph6Error& e) {
      return e.kind();
    }
    FAIL("expected a parse error for '" << std::string(token) << "'");
    return Kind::kEmpty;
  };
  CHECK(kind_of("") == Kind::kEmpty);
  CHECK(kind_of("C~ ") == Kind::kByteOutOfRange);
  CHECK(kind_of("C\x7f") == Kind::kByteOutOfRange);
  CHECK(kind_of("?") == Kind::kBadHeader);       // n = 0
  CHECK(kind_of("~?@?") == Kind::kBadHeader);    // multi-byte header
  CHECK(kind_of("X") == Kind::kBadHeader);       // n = 25 > kMaxVertices
  CHECK(kind_of("C") == Kind::kBodyLength);
  CHECK(kind_of("C~~") == Kind::kBodyLength);
  CHECK(kind_of("B@") == Kind::kTrailingBits);   // n = 3 uses 3 of 6 bits
}

TEST_CASE("encode_graph6 matches known tokens") {
  CHECK(encode_graph6(Graph(1, {})) == "@");
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(encode_graph6(empty_graph(4)) == "C?");
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("graph6 round trip on every connected graph with n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : connected_corpus(n)) {
      const std::string token = encode_graph6(g);
      REQUIRE(parse_graph6(token).same_adjacency(g));
      REQUIRE(encode_graph6(parse_graph6(token)) == token);
    }
  }
  // n <= 5: every labelled graph, connected or not.
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      std::vector<Edge> edges;
      int bit = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
          if ((mask >> bit) & 1U) edges.push_back({i, j});
      const Graph g(n, edges);
      REQUIRE(parse_graph6(encode_graph6(g)).same_adjacency(g));
    }
  }
}

TEST_CASE("corpus sizes match the number of connected graphs (OEIS A001349)") {
  const int expected[] = {0, 0, 0, 2, 6, 21, 112, 853, 11117};
  for (int n = 3; n <= 8; ++n) {
    const auto corpus = connected_corpus(n);
    CHECK(static_cast<int>(corpus.size()) == expected[n]);
    for (const Graph& g : corpus) REQUIRE(bfs_connected(g));
  }
}

TEST_CASE("random_connected_graph") {
  SUBCASE("forced K2") {
    for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
      const Graph g = random_connected_graph(2, 1.0, seed);
      CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    }
  }
  SUBCASE("deterministic per seed") {
    CHECK(random_connected_graph(5, 0.5, 7).edges() == random_connected_graph(5, 0.5, 7).edges());
  }
  SUBCASE("connected and lexicographic over 1000 samples") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const Graph g = random_connected_graph(8, 0.3, seed);
      REQUIRE(bfs_connected(g));
      REQUIRE(std::is_sorted(g.edges().begin(), g.edges().end()));
    }
  }
  SUBCASE("gives up when connectivity is hopeless") {
    CHECK_THROWS_AS(random_connected_graph(20, 1e-9, 1, 50), std::runtime_error);
  }
  SUBCASE("rejects bad arguments") {
    CHECK_THROWS_AS(random_connected_graph(1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_connected_graph(4, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_connected_graph(4, 1.5, 0), std::invalid_argument);
  }
}

TEST_CASE("is_independent") {
  const Graph p4 = p4_example_graph();
  // {x1, x2} in 1-based labels = bits {0, 1}.
  CHECK(is_independent(p4, VertexSubset{0b0011}));
  CHECK_FALSE(is_independent(complete_graph(2), VertexSubset{0b11}));
  CHECK(is_independent(complete_graph(5), VertexSubset{0}));
  CHECK(is_independent(cycle_graph(6), VertexSubset{0}));
}

TEST_CASE("brute_force_mis examples") {
  const MisResult p4 = brute_force_mis(p4_example_graph());
  CHECK(p4.alpha == 2);
  CHECK(p4.optima == std::vector<VertexSubset>{{0b0011}, {0b0110}, {0b1100}});

  for (int n = 1; n <= 6; ++n) {
    const MisResult k = brute_force_mis(complete_graph(n));
    CHECK(k.alpha == 1);
    CHECK(static_cast<int>(k.optima.size()) == n);
  }

  const MisResult c5 = brute_force_mis(cycle_graph(5));
  CHECK(c5.alpha == 2);
  CHECK(c5.optima.size() == 5);
}

TEST_CASE("brute_force_mis optima are independent and maximal in size") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
    const Graph g = random_connected_graph(n, 0.35, rng());
    const MisResult mis = brute_force_mis(g);
    for (VertexSubset s : mis.optima) {
      REQUIRE(is_independent(g, s));
      REQUIRE(s.size() == mis.alpha);
    }
    std::size_t count_alpha = 0;
    for (std::uint32_t z = 0; z < (1U << n); ++z) {
      const VertexSubset s{z};
      if (!is_independent(g, s)) continue;
      REQUIRE(s.size() <= mis.alpha);
      count_alpha += s.size() == mis.alpha;
    }
    REQUIRE(count_alpha == mis.optima.size());
  }
}

TEST_CASE("read_graph6_file errors") {
  CHECK_THROWS_AS(read_graph6_file("/nonexistent/file.g6"), std::runtime_error);
}
