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


#include "esopq/boolean.hpp"

#include <algorithm>
#include <unordered_map>

namespace esopq {
namespace {

std::uint32_t bit(int var) {
  if (var < 0 || var >= 32) throw std::invalid_argument("cube variable index out of range");
  return 1U << var;
}

// Endpoints of a positive two-literal cube.
std::pair<int, int> edge_endpoints(const Cube& edge) {
  if (edge.negative_mask() != 0U || __builtin_popcount(edge.positive_mask()) != 2) {
    throw std::invalid_argument("expected a positive two-literal edge cube, got " +
                                to_string(edge));
  }
  const std::uint32_t m = edge.positive_mask();
  return {__builtin_ctz(m), 31 - __builtin_clz(m)};
}

}  // namespace

Cube::Cube(std::initializer_list<Literal> literals) {
  for (const Literal& lit : literals) {
    auto next = with(lit);
    if (!next) {
      throw std::invalid_argument("contradictory literals on x" + std::to_string(lit.var));
    }
    *this = *next;
  }
}

Cube Cube::from_masks(std::uint32_t positive, std::uint32_t negative) {
  if ((positive & negative) != 0U) {
    throw std::invalid_argument("cube masks overlap");
  }
  Cube c;
  c.positive_ = positive;
  c.negative_ = negative;
  return c;
}

std::vector<Literal> Cube::literals() const {
  std::vector<Literal> out;
  for (std::uint32_t rest = support(); rest != 0U; rest &= rest - 1U) {
    const int v = __builtin_ctz(rest);
    out.push_back({v, (positive_ >> v) & 1U ? Polarity::kPositive : Polarity::kNegative});
  }
  return out;
}

std::optional<Cube> Cube::with(Literal lit) const {
  const std::uint32_t b = bit(lit.var);
  Cube out = *this;
  if (lit.polarity == Polarity::kPositive) {
    if (negative_ & b) return std::nullopt;
    out.positive_ |= b;
  } else {
    if (positive_ & b) return std::nullopt;
    out.negative_ |= b;
  }
  return out;
}

std::strong_ordering operator<=>(const Cube& a, const Cube& b) {
  const auto la = a.literals();
  const auto lb = b.literals();
  const std::size_t common = std::min(la.size(), lb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (la[i].var != lb[i].var) return la[i].var <=> lb[i].var;
    if (la[i].polarity != lb[i].polarity) return la[i].polarity <=> lb[i].polarity;
  }
  return la.size() <=> lb.size();
}

std::string to_string(const Cube& c) {
  if (c.empty()) return "1";
  std::string out;
  for (const Literal& lit : c.literals()) {
    if (!out.empty()) out += ' ';
    if (lit.polarity == Polarity::kNegative) out += '~';
    out += 'x' + std::to_string(lit.var);
  }
  return out;
}

std::optional<Cube> cube_and(const Cube& a, const Cube& b) {
  if ((a.positive_mask() & b.negative_mask()) != 0U ||
      (a.negative_mask() & b.positive_mask()) != 0U) {
    return std::nullopt;
  }
  return Cube::from_masks(a.positive_mask() | b.positive_mask(),
                          a.negative_mask() | b.negative_mask());
}

std::vector<Cube> violation_sop(const Graph& g) {
  std::vector<Cube> cubes;
  cubes.reserve(g.edges().size());
  for (const Edge& e : g.edges()) cubes.push_back(Cube{pos(e.u), pos(e.v)});
  return cubes;
}

Esop negate_edge_cube(const Cube& edge) {
  const auto [i, j] = edge_endpoints(edge);
  return Esop{{Cube{neg(i), pos(j)}, Cube{neg(j)}}};
}

Esop or_chain_to_esop(std::span<const Cube> edge_cubes, const EsopOptions& options) {
  std::vector<Esop> negated;
  negated.reserve(edge_cubes.size());
  for (const Cube& e : edge_cubes) negated.push_back(negate_edge_cube(e));

  std::vector<Cube> output;
  std::vector<Cube> term;
  std::vector<Cube> next;
  for (std::size_t k = 0; k < edge_cubes.size(); ++k) {
    term.assign(1, edge_cubes[k]);
    for (std::size_t r = k + 1; r < edge_cubes.size(); ++r) {
      const std::uint32_t edge_vars = edge_cubes[r].positive_mask();
      next.clear();
      for (const Cube& c : term) {
        // A negative literal on either endpoint already implies not(e_r).
        if ((c.negative_mask() & edge_vars) != 0U) {
          next.push_back(c);
          continue;
        }
        for (const Cube& d : negated[r].cubes) {
          if (auto merged = cube_and(c, d)) next.push_back(*merged);
        }
      }
      if (next.size() + output.size() > options.cube_budget) {
        throw CubeBudgetExceeded(options.cube_budget);
      }
      term.swap(next);
    }
    output.insert(output.end(), term.begin(), term.end());
    if (output.size() > options.cube_budget) throw CubeBudgetExceeded(options.cube_budget);
  }
  return minimize(Esop{std::move(output)});
}

Esop violation_esop(const Graph& g, const EsopOptions& options) {
  const auto sop = violation_sop(g);
  return or_chain_to_esop(sop, options);
}

bool esop_eval(const Esop& e, VertexSubset s) {
  bool parity = false;
  for (const Cube& c : e.cubes) parity ^= c.satisfied_by(s);
  return parity;
}

Esop minimize(const Esop& e) {
  auto key = [](const Cube& c) {
    return (static_cast<std::uint64_t>(c.positive_mask()) << 32) | c.negative_mask();
  };
  std::unordered_map<std::uint64_t, std::size_t> multiplicity;
  for (const Cube& c : e.cubes) ++multiplicity[key(c)];

  Esop out;
  for (const Cube& c : e.cubes) {
    auto it = multiplicity.find(key(c));
    if (it == multiplicity.end()) continue;
    if (it->second % 2 == 1) out.cubes.push_back(c);
    multiplicity.erase(it);
  }
  return out;
}

bool pairwise_disjoint(const Esop& e) {
  for (std::size_t a = 0; a < e.cubes.size(); ++a) {
    for (std::size_t b = a + 1; b < e.cubes.size(); ++b) {
      if (cube_and(e.cubes[a], e.cubes[b]).has_value()) return false;
    }
  }
  return true;
}

std::string dump_esop(const Esop& e) {
  std::vector<Cube> sorted = e.cubes;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const Cube& c : sorted) {
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace esopq
