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


#include <cmath>
#include <numbers>

#include "doctest.h"
#include "esopq/hamiltonian.hpp"
#include "esopq/optimize.hpp"
#include "test_support.hpp"

using namespace esopq;
using std::numbers::pi;

namespace {

Bounds box(double lo, double hi, int dim) {
  return {Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi)};
}

DiagonalCost p4_esop_diagonal() {
  return zpoly_to_diagonal(esop_cost_hamiltonian(p4_example_graph(), 8.0), 4);
}

// Dense scan oracle for p = 1 over gamma in [-pi, pi), beta in [-pi/2, pi/2).
double grid_scan_minimum(const DiagonalCost& d, int points) {
  double best = 1e300;
  for (int i = 0; i < points; ++i) {
    for (int j = 0; j < points; ++j) {
      Eigen::VectorXd x(2);
      x << -pi + 2 * pi * i / points, -pi / 2 + pi * j / points;
      best = std::min(best, qaoa_objective(d, x));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("local_search on a quadratic bowl") {
  const Objective bowl = [](const Eigen::VectorXd& x) {
    return (x[0] - 0.7) * (x[0] - 0.7) + (x[1] + 1.3) * (x[1] + 1.3);
  };
  for (const auto& start : {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(-2.5, 2.5),
                            Eigen::Vector2d(2.9, -2.9)}) {
    const auto r = local_search(bowl, start, box(-3, 3, 2), 2000, 1e-14);
    CHECK(std::abs(r.point[0] - 0.7) < 1e-4);
    CHECK(std::abs(r.point[1] + 1.3) < 1e-4);
  }
}

TEST_CASE("local_search contract edges") {
  const Objective bowl = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  SUBCASE("already at the minimum") {
    const auto r = local_search(bowl, Eigen::Vector2d::Zero(), box(-1, 1, 2), 100, 1e-12);
    CHECK(r.value == 0.0);
  }
  SUBCASE("budget of one evaluates the start only") {
    const Eigen::Vector2d start(0.3, -0.2);
    const auto r = local_search(bowl, start, box(-1, 1, 2), 1, 1e-12);
    CHECK(r.evals == 1);
    CHECK(r.point == start);
    CHECK(r.value == doctest::Approx(bowl(start)));
  }
  SUBCASE("never worse than the start and respects bounds") {
    const Objective wavy = [](const Eigen::VectorXd& x) {
      return std::sin(3 * x[0]) * std::cos(2 * x[1]) + 0.1 * x[0];
    };
    for (int k = 0; k < 20; ++k) {
      const Eigen::Vector2d start(-0.9 + 0.09 * k, 0.8 - 0.08 * k);
      const auto r = local_search(wavy, start, box(-1, 1, 2), 60, 1e-9);
      REQUIRE(r.value <= wavy(start));
      REQUIRE(r.evals <= 60);
      REQUIRE(box(-1, 1, 2).contains(r.point));
    }
  }
  CHECK_THROWS_AS(local_search(bowl, Eigen::Vector2d(2, 0), box(-1, 1, 2), 10, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("OptimizeConfig validation") {
  OptimizeConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.grid_points = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.p = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.beta_bound = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("constant diagonal is degenerate") {
  const DiagonalCost d(Eigen::VectorXd::Constant(8, 2.5));
  const auto r = optimize_angles(d, OptimizeConfig{});
  CHECK(r.degenerate);
  CHECK(r.best_exp == 2.5);
  CHECK(r.params == QaoaParams::zeros(1));
  CHECK_FALSE(approximation_ratio(r.best_exp, d).has_value());
}

TEST_CASE("edgeless two-vertex graph reaches -2") {
  const DiagonalCost d = zpoly_to_diagonal(esop_cost_hamiltonian(empty_graph(2), 4.0), 2);
  const auto r = optimize_angles(d, OptimizeConfig{});
  CHECK(r.best_exp == doctest::Approx(-2.0).epsilon(1e-3));
  CHECK(r.best_exp <= grid_scan_minimum(d, 256) + 1e-9);
}

TEST_CASE("P4 ESOP at p = 1 matches the dense-grid oracle") {
  const DiagonalCost d = p4_esop_diagonal();
  const auto r = optimize_angles(d, OptimizeConfig{});
  // 256 x 256 scan (numpy prototype and the scan below agree): -0.59956.
  CHECK(r.best_exp <= -0.5995 );
  CHECK(r.best_exp <= grid_scan_minimum(d, 128) + 1e-9);
  CHECK(r.best_exp == doctest::Approx(expectation(run_qaoa(d, r.params), d)));
  CHECK(*approximation_ratio(r.best_exp, d) >= 0.3);
}

TEST_CASE("optimizer is deterministic and never worse than zero angles") {
  const DiagonalCost d = p4_esop_diagonal();
  for (Strategy s : {Strategy::kGridRefine, Strategy::kMultistart}) {
    for (int p : {1, 2}) {
      OptimizeConfig cfg;
      cfg.p = p;
      cfg.strategy = s;
      cfg.restarts = 4;
      cfg.seed = 77;
      const auto a = optimize_angles(d, cfg);
      const auto b = optimize_angles(d, cfg);
      CHECK(a.params == b.params);
      CHECK(a.best_exp == b.best_exp);
      CHECK(a.evals == b.evals);
      CHECK(a.best_exp <= d.mean() + 1e-12);
      CHECK(a.params.layers() == p);
    }
  }
}

TEST_CASE("restart seeds are stable when the restart count grows") {
  const DiagonalCost d = p4_esop_diagonal();
  OptimizeConfig cfg;
  cfg.p = 2;
  cfg.seed = 5;
  cfg.restarts = 3;
  const double three = optimize_angles(d, cfg).best_exp;
  cfg.restarts = 6;
  CHECK(optimize_angles(d, cfg).best_exp <= three);
}

TEST_CASE("more layers do not hurt on P4") {
  const DiagonalCost d = p4_esop_diagonal();
  OptimizeConfig cfg;
  const double p1 = optimize_angles(d, cfg).best_exp;
  cfg.p = 2;
  const double p2 = optimize_angles(d, cfg).best_exp;
  CHECK(p2 <= p1 + 1e-6);
}
