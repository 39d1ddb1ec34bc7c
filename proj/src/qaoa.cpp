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


#include "esopq/qaoa.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "esopq/random.hpp"

namespace esopq {

std::optional<double> approximation_ratio(double expectation_value, double c_min, double c_max) {
  if (!(c_max - c_min > DiagonalCost::kArgminTolerance)) return std::nullopt;
  const double ar = (expectation_value - c_max) / (c_min - c_max);
  return std::clamp(ar, 0.0, 1.0);
}

std::string bitstring(std::uint32_t z, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((z >> q) & 1U) out[static_cast<std::size_t>(n - 1 - q)] = '1';
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> sample_counts(const StateVector& state,
                                                                    std::uint64_t shots,
                                                                    std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample_counts: shots must be >= 1");
  const Eigen::VectorXd probs = state.probabilities();
  std::vector<double> cdf(static_cast<std::size_t>(probs.size()));
  double running = 0.0;
  for (Eigen::Index z = 0; z < probs.size(); ++z) {
    running += probs[z];
    cdf[static_cast<std::size_t>(z)] = running;
  }
  std::vector<std::uint64_t> counts(cdf.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform01(rng) * running;
    // First entry with cdf > u always has nonzero probability.
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto idx = static_cast<std::size_t>(it - cdf.begin());
    if (it == cdf.end()) {
      idx = cdf.size() - 1;
      while (idx > 0 && probs[static_cast<Eigen::Index>(idx)] == 0.0) --idx;
    }
    ++counts[idx];
  }
  std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
  for (std::size_t z = 0; z < counts.size(); ++z) {
    if (counts[z] != 0) out.emplace_back(static_cast<std::uint32_t>(z), counts[z]);
  }
  return out;
}

std::string dump_state(const StateVector& state) {
  const Eigen::VectorXd probs = state.probabilities();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(probs.size()));
  for (Eigen::Index z = 0; z < probs.size(); ++z) order[static_cast<std::size_t>(z)] = z;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return probs[a] > probs[b]; });
  std::string out = "index,probability\n";
  char buf[64];
  for (Eigen::Index z : order) {
    std::snprintf(buf, sizeof buf, "%lld,%.12g\n", static_cast<long long>(z), probs[z]);
    out += buf;
  }
  return out;
}

}  // namespace esopq
