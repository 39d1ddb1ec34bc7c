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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "esopq/graph.hpp"

namespace esopq {

enum class Polarity : std::uint8_t { kPositive, kNegative };

struct Literal {
  int var = 0;
  Polarity polarity = Polarity::kPositive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, Polarity::kPositive}; }
inline Literal neg(int var) { return {var, Polarity::kNegative}; }

/**
 * Conjunction of literals over variables 0..31.
 *
 * Stored as two disjoint masks, so each variable carries at most one
 * polarity and equality is literal-set equality. The empty cube is the
 * constant-true conjunction. Literals iterate in ascending variable order.
 */
class Cube {
 public:
  Cube() = default;

  /// Throws std::invalid_argument if a variable appears with both polarities.
  Cube(std::initializer_list<Literal> literals);

  static Cube from_masks(std::uint32_t positive, std::uint32_t negative);

  std::uint32_t positive_mask() const { return positive_; }
  std::uint32_t negative_mask() const { return negative_; }
  std::uint32_t support() const { return positive_ | negative_; }
  int size() const { return __builtin_popcount(support()); }
  bool empty() const { return support() == 0U; }

  /// Literals sorted by variable index.
  std::vector<Literal> literals() const;

  /// Adds a literal; nullopt when it contradicts an existing one.
  std::optional<Cube> with(Literal lit) const;

  bool satisfied_by(VertexSubset s) const {
    return (s.bits & positive_) == positive_ && (s.bits & negative_) == 0U;
  }

  friend bool operator==(const Cube&, const Cube&) = default;

  /// Lexicographic over the ascending literal sequence; at equal variables
  /// the positive literal sorts first, and a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Cube& a, const Cube& b);

 private:
  std::uint32_t positive_ = 0;
  std::uint32_t negative_ = 0;
};

/// `xK` / `~xK` joined by single spaces; "1" for the empty cube.
std::string to_string(const Cube& c);

/// Conjunction of two cubes; nullopt marks a contradiction (some variable
/// with opposite polarities).
std::optional<Cube> cube_and(const Cube& a, const Cube& b);

/// XOR of cubes, kept in construction order.
struct Esop {
  std::vector<Cube> cubes;

  std::size_t size() const { return cubes.size(); }
  bool empty() const { return cubes.empty(); }

  friend bool operator==(const Esop&, const Esop&) = default;
};

class CubeBudgetExceeded : public std::runtime_error {
 public:
  explicit CubeBudgetExceeded(std::size_t budget)
      : std::runtime_error("ESOP expansion exceeded cube budget of " + std::to_string(budget)),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

struct EsopOptions {
  /// Upper bound on live cubes (chain term under construction plus finished
  /// output) during expansion.
  std::size_t cube_budget = std::size_t{1} << 20;
};

/// One positive two-literal cube per edge, in edge order. OR semantics.
std::vector<Cube> violation_sop(const Graph& g);

/// not(x_i and x_j) as  (~x_i & x_j) ^ ~x_j.
/// Throws std::invalid_argument unless `edge` has exactly two positive literals.
Esop negate_edge_cube(const Cube& edge);

/// Rewrites an OR of edge cubes e_0 | ... | e_{m-1} as the XOR chain
///   XOR_k  e_k & not(e_{k+1}) & ... & not(e_{m-1}),
/// expanding each negated edge and distributing AND over XOR. Throws
/// std::invalid_argument on non-edge cubes and CubeBudgetExceeded on blow-up.
Esop or_chain_to_esop(std::span<const Cube> edge_cubes, const EsopOptions& options = {});

/// Convenience: or_chain_to_esop(violation_sop(g)).
Esop violation_esop(const Graph& g, const EsopOptions& options = {});

/// Parity of satisfied cubes.
bool esop_eval(const Esop& e, VertexSubset s);

/// Cancels identical cube pairs (x ^ x = 0). Survivors keep their first
/// occurrence order.
Esop minimize(const Esop& e);

/// True iff every cube pair has a variable with opposite polarities, which
/// makes at most one cube true under any assignment.
bool pairwise_disjoint(const Esop& e);

/// Golden-file form: one cube per line, cubes sorted, trailing newline.
std::string dump_esop(const Esop& e);

}  // namespace esopq
