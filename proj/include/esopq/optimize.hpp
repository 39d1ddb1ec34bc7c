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
#include <functional>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "esopq/hamiltonian.hpp"
#include "esopq/qaoa.hpp"

namespace esopq {

/// Axis-aligned box. Points handed to objectives are always inside it.
struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  bool contains(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return ((x.array() >= lower.array()) && (x.array() <= upper.array())).all();
  }
  Eigen::VectorXd clamp(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return x.cwiseMax(lower).cwiseMin(upper);
  }
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct LocalSearchResult {
  Eigen::VectorXd point;
  double value = 0.0;
  int evals = 0;
};

/**
 * Bounded Nelder-Mead. Trial points are projected onto the box.
 *
 * The start is always evaluated first, so the returned value never exceeds
 * objective(start). Stops after `max_evals` evaluations or once the spread
 * of simplex values drops below `tol`. `initial_step` sets the simplex edge
 * length (a non-positive value picks 10% of each box width).
 */
LocalSearchResult local_search(const Objective& objective, const Eigen::VectorXd& start,
                               const Bounds& bounds, int max_evals, double tol,
                               double initial_step = 0.0);

enum class Strategy { kGridRefine, kMultistart };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

struct OptimizeConfig {
  int p = 1;
  Strategy strategy = Strategy::kGridRefine;
  int grid_points = 32;
  int restarts = 20;
  int max_evals = 500;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  double gamma_bound = std::numbers::pi;        // gamma in [-gamma_bound, gamma_bound]
  double beta_bound = std::numbers::pi / 2.0;   // beta in [-beta_bound, beta_bound]

  /// Throws std::invalid_argument on p < 1, grid_points < 2, restarts < 1,
  /// max_evals < 1, negative tol or empty bounds.
  void validate() const;

  Bounds bounds() const;
};

struct OptimizeResult {
  QaoaParams params;
  double best_exp = 0.0;
  int evals = 0;
  /// Constant diagonal: nothing to optimise, AR undefined.
  bool degenerate = false;
};

/// Minimises <gamma, beta| C |gamma, beta> over the configured box.
///
/// p = 1 with grid_refine: full grid_points x grid_points scan, then a
/// Nelder-Mead polish from the best cell. Otherwise: `restarts` local runs
/// from seeded uniform draws. The all-zero angles are always evaluated, so
/// best_exp <= mean of the diagonal.
OptimizeResult optimize_angles(const DiagonalCost& cost, const OptimizeConfig& cfg);

/// Exact QAOA expectation at packed angles [gamma_1, beta_1, ...].
double qaoa_objective(const DiagonalCost& cost, const Eigen::VectorXd& angles);

}  // namespace esopq
