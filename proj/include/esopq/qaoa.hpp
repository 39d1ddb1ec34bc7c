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

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "esopq/hamiltonian.hpp"

namespace esopq {

/**
 * Dense n-qubit state. Amplitude z belongs to the basis state whose bit i is
 * qubit i, matching DiagonalCost indexing.
 */
template <typename Scalar>
class BasicStateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  BasicStateVector() = default;

  /// Takes ownership of `amps`; size must be 2^n.
  explicit BasicStateVector(Amplitudes amps) : amps_(std::move(amps)) {
    const auto size = static_cast<std::uint64_t>(amps_.size());
    if (size < 2 || (size & (size - 1)) != 0) {
      throw std::invalid_argument("state length must be 2^n with n >= 1");
    }
    n_ = __builtin_ctzll(size);
  }

  static BasicStateVector basis(int n, std::uint32_t z) {
    Amplitudes amps = Amplitudes::Zero(Eigen::Index{1} << n);
    amps[z] = Complex(1);
    return BasicStateVector(std::move(amps));
  }

  int num_qubits() const { return n_; }
  Eigen::Index size() const { return amps_.size(); }
  const Amplitudes& amplitudes() const { return amps_; }
  Amplitudes& amplitudes() { return amps_; }

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> probabilities() const { return amps_.cwiseAbs2(); }
  Scalar norm() const { return amps_.norm(); }

 private:
  Amplitudes amps_;
  int n_ = 0;
};

using StateVector = BasicStateVector<double>;

/// Angles for p QAOA layers; layer k applies the cost phase gammas[k] and
/// then the mixer betas[k].
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int layers() const { return static_cast<int>(gammas.size()); }

  /// Throws std::invalid_argument on unequal lengths or p < 1.
  void validate() const {
    if (gammas.size() != betas.size()) throw std::invalid_argument("gamma/beta length mismatch");
    if (gammas.empty()) throw std::invalid_argument("QAOA needs at least one layer");
  }

  static QaoaParams zeros(int p) {
    return {std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
  }

  /// Packs as [gamma_1, beta_1, gamma_2, beta_2, ...].
  Eigen::VectorXd to_vector() const {
    Eigen::VectorXd x(2 * gammas.size());
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      x[2 * k] = gammas[k];
      x[2 * k + 1] = betas[k];
    }
    return x;
  }

  static QaoaParams from_vector(const Eigen::Ref<const Eigen::VectorXd>& x) {
    if (x.size() % 2 != 0) throw std::invalid_argument("angle vector must have even length");
    QaoaParams out;
    for (Eigen::Index k = 0; k < x.size() / 2; ++k) {
      out.gammas.push_back(x[2 * k]);
      out.betas.push_back(x[2 * k + 1]);
    }
    return out;
  }

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

/// |+>^n.
template <typename Scalar = double>
BasicStateVector<Scalar> initial_plus_state(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("qubit count outside [1, " + std::to_string(kMaxVertices) + "]");
  }
  using State = BasicStateVector<Scalar>;
  const Eigen::Index size = Eigen::Index{1} << n;
  const Scalar amp = std::pow(Scalar(2), Scalar(-n) / Scalar(2));
  return State(State::Amplitudes::Constant(size, typename State::Complex(amp)));
}

/// amp_z <- amp_z * exp(-i gamma C_z).
template <typename Scalar>
void apply_cost_layer(BasicStateVector<Scalar>& state, const DiagonalCost& cost, double gamma) {
  if (static_cast<std::size_t>(state.size()) != cost.size()) {
    throw std::invalid_argument("state and diagonal sizes differ");
  }
  auto& amps = state.amplitudes();
  const auto& values = cost.values();
  for (Eigen::Index z = 0; z < amps.size(); ++z) {
    const double phase = -gamma * values[z];
    amps[z] *= std::complex<Scalar>(static_cast<Scalar>(std::cos(phase)),
                                    static_cast<Scalar>(std::sin(phase)));
  }
}

/// exp(-i beta X_q) on every qubit q: [[cos b, -i sin b], [-i sin b, cos b]].
template <typename Scalar>
void apply_mixer_layer(BasicStateVector<Scalar>& state, double beta) {
  using Complex = std::complex<Scalar>;
  const Scalar c = static_cast<Scalar>(std::cos(beta));
  const Complex s(0, static_cast<Scalar>(-std::sin(beta)));
  auto& amps = state.amplitudes();
  const Eigen::Index size = amps.size();
  for (int q = 0; q < state.num_qubits(); ++q) {
    const Eigen::Index stride = Eigen::Index{1} << q;
    for (Eigen::Index block = 0; block < size; block += 2 * stride) {
      for (Eigen::Index z = block; z < block + stride; ++z) {
        const Complex a0 = amps[z];
        const Complex a1 = amps[z + stride];
        amps[z] = c * a0 + s * a1;
        amps[z + stride] = s * a0 + c * a1;
      }
    }
  }
}

/// U(B, beta_p) U(C, gamma_p) ... U(B, beta_1) U(C, gamma_1) |+>^n.
template <typename Scalar = double>
BasicStateVector<Scalar> run_qaoa(const DiagonalCost& cost, const QaoaParams& params) {
  params.validate();
  auto state = initial_plus_state<Scalar>(cost.num_qubits());
  for (int k = 0; k < params.layers(); ++k) {
    apply_cost_layer(state, cost, params.gammas[k]);
    apply_mixer_layer(state, params.betas[k]);
  }
  return state;
}

/// <psi| C |psi>.
template <typename Scalar>
double expectation(const BasicStateVector<Scalar>& state, const DiagonalCost& cost) {
  if (static_cast<std::size_t>(state.size()) != cost.size()) {
    throw std::invalid_argument("state and diagonal sizes differ");
  }
  return state.probabilities().template cast<double>().dot(cost.values());
}

/// (<C> - C_max) / (C_min - C_max), clamped to [0, 1] against rounding.
/// nullopt when the spectrum is degenerate (C_min == C_max).
std::optional<double> approximation_ratio(double expectation_value, double c_min, double c_max);

inline std::optional<double> approximation_ratio(double expectation_value,
                                                 const DiagonalCost& cost) {
  return approximation_ratio(expectation_value, cost.c_min(), cost.c_max());
}

/// Bitstring with qubit n-1 leftmost and qubit 0 (x_0) rightmost.
std::string bitstring(std::uint32_t z, int n);

/// Multinomial draw of `shots` measurements; entries with nonzero count
/// only, ascending by basis index. Deterministic per seed.
std::vector<std::pair<std::uint32_t, std::uint64_t>> sample_counts(const StateVector& state,
                                                                    std::uint64_t shots,
                                                                    std::uint64_t seed);

/// `index,probability` lines sorted by probability descending (ties by index).
std::string dump_state(const StateVector& state);

}  // namespace esopq
