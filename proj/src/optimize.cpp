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


#include "esopq/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "esopq/random.hpp"

namespace esopq {
namespace {

// Ties in value go to the lexicographically smaller point.
bool better(double va, const Eigen::VectorXd& a, double vb, const Eigen::VectorXd& b) {
  if (va != vb) return va < vb;
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

LocalSearchResult local_search(const Objective& objective, const Eigen::VectorXd& start,
                               const Bounds& bounds, int max_evals, double tol,
                               double initial_step) {
  if (max_evals < 1) throw std::invalid_argument("local_search: max_evals must be >= 1");
  const Eigen::Index dim = start.size();
  if (bounds.lower.size() != dim || bounds.upper.size() != dim) {
    throw std::invalid_argument("local_search: bounds dimension mismatch");
  }
  if (!bounds.contains(start)) throw std::invalid_argument("local_search: start outside bounds");

  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    return objective(x);
  };

  std::vector<Eigen::VectorXd> simplex{start};
  std::vector<double> values{eval(start)};
  const Eigen::VectorXd width = bounds.upper - bounds.lower;

  for (Eigen::Index i = 0; i < dim && evals < max_evals; ++i) {
    const double step = initial_step > 0.0 ? initial_step : 0.1 * width[i];
    Eigen::VectorXd vertex = start;
    vertex[i] = start[i] + step <= bounds.upper[i] ? start[i] + step : start[i] - step;
    vertex = bounds.clamp(vertex);
    simplex.push_back(vertex);
    values.push_back(eval(vertex));
  }

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return better(values[a], simplex[a], values[b], simplex[b]);
    });
    std::vector<Eigen::VectorXd> s2;
    std::vector<double> v2;
    for (std::size_t k : order) {
      s2.push_back(simplex[k]);
      v2.push_back(values[k]);
    }
    simplex.swap(s2);
    values.swap(v2);
  };

  // Budget ran out while building the simplex.
  if (simplex.size() < static_cast<std::size_t>(dim) + 1) {
    order.resize(simplex.size());
    sort_simplex();
    return {simplex.front(), values.front(), evals};
  }

  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const std::size_t worst = simplex.size() - 1;
  sort_simplex();
  while (evals < max_evals && values[worst] - values[0] >= tol) {
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (std::size_t k = 0; k < worst; ++k) centroid += simplex[k];
    centroid /= static_cast<double>(worst);

    const Eigen::VectorXd reflected =
        bounds.clamp(centroid + kReflect * (centroid - simplex[worst]));
    const double fr = eval(reflected);
    if (fr < values[0]) {
      if (evals < max_evals) {
        const Eigen::VectorXd expanded =
            bounds.clamp(centroid + kExpand * (centroid - simplex[worst]));
        const double fe = eval(expanded);
        if (fe < fr) {
          simplex[worst] = expanded;
          values[worst] = fe;
        } else {
          simplex[worst] = reflected;
          values[worst] = fr;
        }
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
    } else if (fr < values[worst - 1]) {
      simplex[worst] = reflected;
      values[worst] = fr;
    } else {
      if (evals >= max_evals) break;
      const bool outside = fr < values[worst];
      const Eigen::VectorXd contracted =
          outside ? bounds.clamp(centroid + kContract * (reflected - centroid))
                  : bounds.clamp(centroid + kContract * (simplex[worst] - centroid));
      const double fc = eval(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = contracted;
        values[worst] = fc;
      } else {
        for (std::size_t k = 1; k < simplex.size() && evals < max_evals; ++k) {
          simplex[k] = bounds.clamp(simplex[0] + kShrink * (simplex[k] - simplex[0]));
          values[k] = eval(simplex[k]);
        }
      }
    }
    sort_simplex();
  }
  return {simplex.front(), values.front(), evals};
}

std::string to_string(Strategy s) {
  return s == Strategy::kGridRefine ? "grid_refine" : "multistart";
}

Strategy parse_strategy(const std::string& text) {
  if (text == "grid_refine") return Strategy::kGridRefine;
  if (text == "multistart") return Strategy::kMultistart;
  throw std::invalid_argument("unknown optimizer strategy '" + text + "'");
}

void OptimizeConfig::validate() const {
  if (p < 1) throw std::invalid_argument("optimizer: p must be >= 1");
  if (grid_points < 2) throw std::invalid_argument("optimizer: grid_points must be >= 2");
  if (restarts < 1) throw std::invalid_argument("optimizer: restarts must be >= 1");
  if (max_evals < 1) throw std::invalid_argument("optimizer: max_evals must be >= 1");
  if (!(tol >= 0.0)) throw std::invalid_argument("optimizer: tol must be non-negative");
  if (!(gamma_bound > 0.0) || !(beta_bound > 0.0)) {
    throw std::invalid_argument("optimizer: angle bounds must be nonempty");
  }
}

Bounds OptimizeConfig::bounds() const {
  Bounds b{Eigen::VectorXd(2 * p), Eigen::VectorXd(2 * p)};
  for (int k = 0; k < p; ++k) {
    b.lower[2 * k] = -gamma_bound;
    b.upper[2 * k] = gamma_bound;
    b.lower[2 * k + 1] = -beta_bound;
    b.upper[2 * k + 1] = beta_bound;
  }
  return b;
}

double qaoa_objective(const DiagonalCost& cost, const Eigen::VectorXd& angles) {
  return expectation(run_qaoa(cost, QaoaParams::from_vector(angles)), cost);
}

OptimizeResult optimize_angles(const DiagonalCost& cost, const OptimizeConfig& cfg) {
  cfg.validate();
  const Bounds bounds = cfg.bounds();
  const Eigen::Index dim = 2 * cfg.p;

  OptimizeResult result;
  if (cost.is_constant()) {
    result.params = QaoaParams::zeros(cfg.p);
    result.best_exp = cost.c_min();
    result.evals = 1;
    result.degenerate = true;
    return result;
  }

  int evals = 0;
  const Objective objective = [&](const Eigen::VectorXd& x) {
    ++evals;
    return qaoa_objective(cost, x);
  };

  Eigen::VectorXd best_point = Eigen::VectorXd::Zero(dim);
  double best_value = objective(best_point);
  auto offer = [&](const Eigen::VectorXd& x, double v) {
    if (better(v, x, best_value, best_point)) {
      best_value = v;
      best_point = x;
    }
  };

  if (cfg.p == 1 && cfg.strategy == Strategy::kGridRefine) {
    const int g = cfg.grid_points;
    const double dgamma = 2.0 * cfg.gamma_bound / g;
    const double dbeta = 2.0 * cfg.beta_bound / g;
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) {
        Eigen::VectorXd x(2);
        x << -cfg.gamma_bound + i * dgamma, -cfg.beta_bound + j * dbeta;
        offer(x, objective(x));
      }
    }
    const Eigen::VectorXd seed_point = best_point;
    const auto polished = local_search(objective, seed_point, bounds, cfg.max_evals, cfg.tol,
                                       0.5 * std::min(dgamma, dbeta));
    offer(polished.point, polished.value);
  } else {
    for (int r = 0; r < cfg.restarts; ++r) {
      std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
      Eigen::VectorXd start(dim);
      for (Eigen::Index k = 0; k < dim; ++k) {
        start[k] = bounds.lower[k] + uniform01(rng) * (bounds.upper[k] - bounds.lower[k]);
      }
      const auto run = local_search(objective, start, bounds, cfg.max_evals, cfg.tol);
      offer(run.point, run.value);
    }
  }

  result.params = QaoaParams::from_vector(best_point);
  // Recomputed so best_exp is exactly the expectation of the returned angles.
  result.best_exp = qaoa_objective(cost, best_point);
  result.evals = evals;
  return result;
}

}  // namespace esopq
