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


#include "esopq/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace esopq {

ZPolynomial ZPolynomial::identity(double coeff) { return term(0U, coeff); }

ZPolynomial ZPolynomial::z(int qubit, double coeff) {
  if (qubit < 0 || qubit >= 32) throw std::invalid_argument("qubit index out of range");
  return term(1U << qubit, coeff);
}

ZPolynomial ZPolynomial::term(ZSupport support, double coeff) {
  ZPolynomial p;
  p.terms_[support] = coeff;
  p.prune();
  return p;
}

ZPolynomial ZPolynomial::from_terms(std::map<ZSupport, double> terms) {
  ZPolynomial p;
  p.terms_ = std::move(terms);
  p.prune();
  return p;
}

double ZPolynomial::coeff(ZSupport support) const {
  const auto it = terms_.find(support);
  return it == terms_.end() ? 0.0 : it->second;
}

ZSupport ZPolynomial::qubits() const {
  ZSupport all = 0U;
  for (const auto& [support, c] : terms_) all |= support;
  return all;
}

double ZPolynomial::evaluate(std::uint32_t z) const {
  double total = 0.0;
  for (const auto& [support, c] : terms_) {
    total += (__builtin_popcount(support & z) & 1) ? -c : c;
  }
  return total;
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& other) {
  for (const auto& [support, c] : other.terms_) terms_[support] += c;
  prune();
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& other) {
  for (const auto& [support, c] : other.terms_) terms_[support] -= c;
  prune();
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(double scalar) {
  for (auto& [support, c] : terms_) c *= scalar;
  prune();
  return *this;
}

void ZPolynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

ZPolynomial add(const ZPolynomial& a, const ZPolynomial& b) {
  ZPolynomial out = a;
  out += b;
  return out;
}

ZPolynomial scale(const ZPolynomial& a, double r) {
  ZPolynomial out = a;
  out *= r;
  return out;
}

ZPolynomial mul(const ZPolynomial& a, const ZPolynomial& b) {
  std::map<ZSupport, double> acc;
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) acc[sa ^ sb] += ca * cb;
  return ZPolynomial::from_terms(std::move(acc));
}

double max_abs_difference(const ZPolynomial& a, const ZPolynomial& b) {
  double worst = 0.0;
  for (const auto& [support, c] : (a - b).terms()) worst = std::max(worst, std::abs(c));
  return worst;
}

ZPolynomial literal_zpoly(Literal lit) {
  const double sign = lit.polarity == Polarity::kPositive ? -0.5 : 0.5;
  return ZPolynomial::identity(0.5) + ZPolynomial::z(lit.var, sign);
}

ZPolynomial cube_indicator_zpoly(const Cube& c) {
  ZPolynomial out = ZPolynomial::identity();
  for (const Literal& lit : c.literals()) out = out * literal_zpoly(lit);
  return out;
}

ZPolynomial cube_alternating_sign_zpoly(const Cube& c) {
  if (c.empty()) throw std::invalid_argument("cube_alternating_sign_zpoly: empty cube");
  ZPolynomial out = ZPolynomial::identity();
  int j = 1;
  for (const Literal& lit : c.literals()) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;  // (-1)^(j+1)
    out = out * (sign * literal_zpoly(lit));
    ++j;
  }
  return out;
}

ZPolynomial xor_compose(const ZPolynomial& hf, const ZPolynomial& hg) {
  return hf + hg - 2.0 * (hf * hg);
}

std::string to_string(CubeSignMode mode) {
  return mode == CubeSignMode::kSignNormalized ? "sign_normalized" : "paper_literal";
}

CubeSignMode parse_cube_sign_mode(const std::string& text) {
  if (text == "sign_normalized") return CubeSignMode::kSignNormalized;
  if (text == "paper_literal") return CubeSignMode::kPaperLiteral;
  throw std::invalid_argument("unknown cube sign mode '" + text +
                              "' (expected sign_normalized or paper_literal)");
}

ZPolynomial esop_hamiltonian(const Esop& e, CubeSignMode mode) {
  if (!pairwise_disjoint(e)) return esop_hamiltonian_by_fold(e);
  ZPolynomial sum;
  for (const Cube& c : e.cubes) {
    if (mode == CubeSignMode::kPaperLiteral && !c.empty()) {
      sum += cube_alternating_sign_zpoly(c);
    } else {
      sum -= cube_indicator_zpoly(c);
    }
  }
  return sum;
}

ZPolynomial esop_hamiltonian_by_fold(const Esop& e) {
  ZPolynomial acc;
  for (const Cube& c : e.cubes) acc = xor_compose(acc, cube_indicator_zpoly(c));
  return -acc;
}

ZPolynomial objective_hmax(int n) {
  if (n < 1) throw std::invalid_argument("objective_hmax: n must be >= 1");
  ZPolynomial out;
  for (int j = 0; j < n; ++j) out += literal_zpoly(pos(j));
  return out;
}

ZPolynomial esop_cost_hamiltonian(const Esop& esop, int n, double penalty, CubeSignMode mode) {
  if (!(penalty > 0.0)) throw std::invalid_argument("ESOP penalty must be positive");
  return -objective_hmax(n) - penalty * esop_hamiltonian(esop, mode);
}

ZPolynomial esop_cost_hamiltonian(const Graph& g, double penalty, CubeSignMode mode,
                                  const EsopOptions& options) {
  return esop_cost_hamiltonian(violation_esop(g, options), g.num_vertices(), penalty, mode);
}

ZPolynomial standard_cost_hamiltonian(const Graph& g, double J) {
  if (!(J > 1.0)) throw std::invalid_argument("standard encoding requires J > 1");
  ZPolynomial violations;
  for (const Edge& e : g.edges()) violations += cube_indicator_zpoly(Cube{pos(e.u), pos(e.v)});
  return -objective_hmax(g.num_vertices()) + J * violations;
}

DiagonalCost::DiagonalCost(Eigen::VectorXd values) : values_(std::move(values)) {
  const auto size = static_cast<std::uint64_t>(values_.size());
  if (size < 2 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("diagonal length must be 2^n with n >= 1");
  }
  n_ = __builtin_ctzll(size);
  c_min_ = values_.minCoeff();
  c_max_ = values_.maxCoeff();
  for (Eigen::Index z = 0; z < values_.size(); ++z) {
    if (values_[z] - c_min_ <= kArgminTolerance) argmin_.push_back(static_cast<std::uint32_t>(z));
  }
}

DiagonalCost zpoly_to_diagonal(const ZPolynomial& h, int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("zpoly_to_diagonal: n outside [1, " +
                                std::to_string(kMaxVertices) + "]");
  }
  if ((h.qubits() >> n) != 0U) {
    throw std::invalid_argument("zpoly_to_diagonal: term acts on a qubit >= n");
  }
  const Eigen::Index size = Eigen::Index{1} << n;
  Eigen::VectorXd values = Eigen::VectorXd::Zero(size);
  for (const auto& [support, c] : h.terms()) {
    for (Eigen::Index z = 0; z < size; ++z) {
      values[z] += (__builtin_popcount(support & static_cast<std::uint32_t>(z)) & 1) ? -c : c;
    }
  }
  return DiagonalCost(std::move(values));
}

std::string dump_hamiltonian(const ZPolynomial& h) {
  auto indices = [](ZSupport s) {
    std::vector<int> out;
    for (; s != 0U; s &= s - 1U) out.push_back(__builtin_ctz(s));
    return out;
  };
  std::vector<std::pair<ZSupport, double>> terms(h.terms().begin(), h.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = __builtin_popcount(a.first);
    const int db = __builtin_popcount(b.first);
    if (da != db) return da < db;
    return indices(a.first) < indices(b.first);
  });
  std::string out;
  char buf[64];
  for (const auto& [support, c] : terms) {
    std::snprintf(buf, sizeof buf, "%.12g", c);
    out += buf;
    out += ' ';
    if (support == 0U) {
      out += '1';
    } else {
      for (int q : indices(support)) out += 'Z' + std::to_string(q);
    }
    out += '\n';
  }
  return out;
}

}  // namespace esopq
