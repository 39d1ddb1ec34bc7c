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
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "esopq/boolean.hpp"
#include "esopq/graph.hpp"

namespace esopq {

/// Set of qubit indices carrying a Z factor; 0 is the identity term.
using ZSupport = std::uint32_t;

/**
 * Real multilinear polynomial in commuting Pauli-Z operators.
 *
 * Every diagonal Hamiltonian on n qubits has exactly one such form. Products
 * use Z_i * Z_i = I, so multiplying two terms XORs their supports. Terms with
 * |coefficient| below kPruneThreshold are dropped after every operation.
 */
class ZPolynomial {
 public:
  static constexpr double kPruneThreshold = 1e-12;

  ZPolynomial() = default;

  static ZPolynomial identity(double coeff = 1.0);
  static ZPolynomial z(int qubit, double coeff = 1.0);
  static ZPolynomial term(ZSupport support, double coeff);
  static ZPolynomial from_terms(std::map<ZSupport, double> terms);

  const std::map<ZSupport, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Coefficient of the given support (0 if absent).
  double coeff(ZSupport support) const;

  /// Union of all supports.
  ZSupport qubits() const;

  /// Diagonal entry at computational basis state `z` (bit i = x_i, and the
  /// Z_i eigenvalue is 1 - 2 x_i).
  double evaluate(std::uint32_t z) const;

  ZPolynomial& operator+=(const ZPolynomial& other);
  ZPolynomial& operator-=(const ZPolynomial& other);
  ZPolynomial& operator*=(double scalar);

  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

 private:
  void prune();
  std::map<ZSupport, double> terms_;
};

ZPolynomial add(const ZPolynomial& a, const ZPolynomial& b);
ZPolynomial scale(const ZPolynomial& a, double r);
ZPolynomial mul(const ZPolynomial& a, const ZPolynomial& b);

inline ZPolynomial operator+(const ZPolynomial& a, const ZPolynomial& b) { return add(a, b); }
inline ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b) {
  return add(a, scale(b, -1.0));
}
inline ZPolynomial operator-(const ZPolynomial& a) { return scale(a, -1.0); }
inline ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) { return mul(a, b); }
inline ZPolynomial operator*(double r, const ZPolynomial& a) { return scale(a, r); }
inline ZPolynomial operator*(const ZPolynomial& a, double r) { return scale(a, r); }

/// Largest coefficient difference over the union of supports.
double max_abs_difference(const ZPolynomial& a, const ZPolynomial& b);

/// x -> (I - Z)/2,  ~x -> (I + Z)/2.
ZPolynomial literal_zpoly(Literal lit);

/// 0/1 indicator of the cube: product of literal_zpoly over its literals.
/// The empty cube yields the identity (constant true); callers that treat
/// that as an error should test Cube::empty() first.
ZPolynomial cube_indicator_zpoly(const Cube& c);

/// Alternating-sign lowering: the j-th literal (1-based, ascending variable
/// index) is multiplied by (-1)^(j+1), giving (-1)^floor(k/2) times the
/// indicator. Throws std::invalid_argument on the empty cube.
ZPolynomial cube_alternating_sign_zpoly(const Cube& c);

/// Indicator of f xor g from indicators of f and g:  Hf + Hg - 2 Hf Hg.
ZPolynomial xor_compose(const ZPolynomial& hf, const ZPolynomial& hg);

/// Per-cube sign convention used when lowering an ESOP.
enum class CubeSignMode {
  kSignNormalized,  // every cube contributes -indicator
  kPaperLiteral,    // every cube contributes cube_alternating_sign_zpoly
};

std::string to_string(CubeSignMode mode);
CubeSignMode parse_cube_sign_mode(const std::string& text);

/// Constraint Hamiltonian of an ESOP. Disjoint ESOPs are lowered as a plain
/// sum of per-cube terms. Otherwise the indicators are folded with
/// xor_compose and the result negated (both modes; per-cube signs have no
/// meaning once the cubes overlap).
ZPolynomial esop_hamiltonian(const Esop& e, CubeSignMode mode = CubeSignMode::kSignNormalized);

/// -(Hc1 xor Hc2 xor ...) folded with xor_compose over cube indicators,
/// regardless of disjointness. Independent route to the sign_normalized sum.
ZPolynomial esop_hamiltonian_by_fold(const Esop& e);

/// sum_j (I - Z_j)/2; the diagonal is popcount(z).
ZPolynomial objective_hmax(int n);

/// -H_MAX - penalty * esop_hamiltonian(esop, mode).
ZPolynomial esop_cost_hamiltonian(const Esop& esop, int n, double penalty,
                                  CubeSignMode mode = CubeSignMode::kSignNormalized);

/// Compiles the violation ESOP of `g` and assembles the cost Hamiltonian.
/// A non-positive `penalty` is rejected; use default_esop_penalty(g).
ZPolynomial esop_cost_hamiltonian(const Graph& g, double penalty,
                                  CubeSignMode mode = CubeSignMode::kSignNormalized,
                                  const EsopOptions& options = {});

inline double default_esop_penalty(const Graph& g) { return 2.0 * g.num_vertices(); }

/// QUBO form -sum x_i + J sum_{ij in E} x_i x_j under x -> (I - Z)/2.
/// Requires J > 1.
ZPolynomial standard_cost_hamiltonian(const Graph& g, double J = 2.0);

/**
 * Dense table of cost eigenvalues, index z = computational basis state with
 * x_0 as the least significant bit. Immutable after construction.
 */
class DiagonalCost {
 public:
  /// Ties for the minimum are resolved within this absolute tolerance.
  static constexpr double kArgminTolerance = 1e-9;

  /// Throws std::invalid_argument unless values.size() == 2^n for some n >= 1.
  explicit DiagonalCost(Eigen::VectorXd values);

  const Eigen::VectorXd& values() const { return values_; }
  int num_qubits() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t z) const { return values_[static_cast<Eigen::Index>(z)]; }

  double c_min() const { return c_min_; }
  double c_max() const { return c_max_; }
  double mean() const { return values_.mean(); }
  bool is_constant() const { return c_max_ - c_min_ <= kArgminTolerance; }
  const std::vector<std::uint32_t>& argmin() const { return argmin_; }

 private:
  Eigen::VectorXd values_;
  int n_ = 0;
  double c_min_ = 0.0;
  double c_max_ = 0.0;
  std::vector<std::uint32_t> argmin_;
};

/// Direct O(2^n * terms) evaluation. Throws std::invalid_argument if a term
/// touches a qubit >= n or n is outside [1, kMaxVertices].
DiagonalCost zpoly_to_diagonal(const ZPolynomial& h, int n);

/// One term per line: coefficient with 12 significant digits, a space, then
/// `Z<i>Z<j>...` or `1` for the identity. Sorted by degree, then by the
/// ascending index list.
std::string dump_hamiltonian(const ZPolynomial& h);

}  // namespace esopq
