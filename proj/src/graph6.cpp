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


#include <fstream>
#include <string>

#include "esopq/graph.hpp"

namespace esopq {
namespace {

constexpr int kByteBias = 63;
constexpr std::string_view kHeaderPrefix = ">>graph6<<";

std::size_t body_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view token) {
  using Kind = Graph6Error::Kind;
  if (token.starts_with(kHeaderPrefix)) token.remove_prefix(kHeaderPrefix.size());
  if (token.empty()) throw Graph6Error(Kind::kEmpty, "graph6: empty token");
  for (std::size_t i = 0; i < token.size(); ++i) {
    const auto c = static_cast<unsigned char>(token[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error(Kind::kByteOutOfRange,
                        "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                            " outside [63, 126]");
    }
  }
  const int n = static_cast<unsigned char>(token[0]) - kByteBias;
  if (n == 63) {
    throw Graph6Error(Kind::kBadHeader, "graph6: multi-byte size header (n > 62) unsupported");
  }
  if (n < 1 || n > kMaxVertices) {
    throw Graph6Error(Kind::kBadHeader,
                      "graph6: vertex count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxVertices) + "]");
  }
  const std::string_view body = token.substr(1);
  if (body.size() != body_bytes(n)) {
    throw Graph6Error(Kind::kBodyLength, "graph6: expected " + std::to_string(body_bytes(n)) +
                                             " body bytes for n=" + std::to_string(n) + ", got " +
                                             std::to_string(body.size()));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto read_bit = [&](std::size_t k) {
    const int value = static_cast<unsigned char>(body[k / 6]) - kByteBias;
    return (value >> (5 - static_cast<int>(k % 6))) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (read_bit(bit)) edges.push_back({i, j});
    }
  }
  for (; bit < body.size() * 6; ++bit) {
    if (read_bit(bit)) throw Graph6Error(Kind::kTrailingBits, "graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.num_vertices();
  std::string out(1, static_cast<char>(n + kByteBias));
  std::string body(body_bytes(n), '\0');
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    }
  }
  for (char& c : body) c = static_cast<char>(c + kByteBias);
  return out + body;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file " + path.string());
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.kind(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace esopq
