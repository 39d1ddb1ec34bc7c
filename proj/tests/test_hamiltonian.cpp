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
#include <random>

#include "doctest.h"
#include "esopq/boolean.hpp"
#include "esopq/hamiltonian.hpp"
#include "test_support.hpp"

using namespace esopq;
using esopq::testing::connected_corpus;
using esopq::testing::popcount;
using esopq::testing::violated_edges;
using esopq::testing::violates;

namespace {

ZPolynomial I(double c = 1.0) { return ZPolynomial::identity(c); }
ZPolynomial Z(int q) { return ZPolynomial::z(q); }

std::vector<double> diag(const ZPolynomial& h, int n) {
  const DiagonalCost d = zpoly_to_diagonal(h, n);
  return {d.values().data(), d.values().data() + d.values().size()};
}

ZPolynomial random_poly(std::mt19937_64& rng, int n) {
  ZPolynomial p;
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int k = 0; k < 5; ++k) {
    p += ZPolynomial::term(static_cast<ZSupport>(rng() % (1U << n)), coeff(rng) / 4.0);
  }
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(Z(0) * Z(0) == I());
  CHECK(((I() - Z(0)) * 0.5 * ((I() + Z(0)) * 0.5)).is_zero());
  CHECK((Z(0) + scale(Z(0), -1.0)).is_zero());
  CHECK(mul(Z(0), Z(1)) == ZPolynomial::term(0b11, 1.0));
  CHECK((Z(0) + 1e-13 * Z(1)).num_terms() == 1);  // pruned
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const ZPolynomial a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    REQUIRE(max_abs_difference(a * b, b * a) < 1e-12);
    REQUIRE(max_abs_difference((a * b) * c, a * (b * c)) < 1e-12);
    REQUIRE(max_abs_difference(a * (b + c), a * b + a * c) < 1e-12);
    // Diagonal of a product is the pointwise product of diagonals.
    const auto da = diag(a, 4), db = diag(b, 4), dab = diag(a * b, 4);
    for (std::size_t z = 0; z < 16; ++z) REQUIRE(dab[z] == doctest::Approx(da[z] * db[z]));
  }
}

TEST_CASE("squaring a +-1 diagonal gives the identity") {
  // Z0 Z1, and the XOR indicator mapped to +-1: I - 2 H.
  const ZPolynomial parity = Z(0) * Z(1);
  CHECK(parity * parity == I());
  const ZPolynomial pm = I() - 2.0 * cube_indicator_zpoly(Cube{pos(0), neg(2)});
  CHECK(max_abs_difference(pm * pm, I()) < 1e-12);
}

TEST_CASE("literal_zpoly") {
  const ZPolynomial x0 = literal_zpoly(pos(0));
  CHECK(x0.coeff(0) == 0.5);
  CHECK(x0.coeff(1) == -0.5);
  const ZPolynomial nx0 = literal_zpoly(neg(0));
  CHECK(nx0.coeff(0) == 0.5);
  CHECK(nx0.coeff(1) == 0.5);
  CHECK(diag(x0, 1) == std::vector<double>{0.0, 1.0});
  CHECK(diag(nx0, 1) == std::vector<double>{1.0, 0.0});
}

TEST_CASE("cube_indicator_zpoly") {
  const ZPolynomial and2 = cube_indicator_zpoly(Cube{pos(0), pos(1)});
  CHECK(max_abs_difference(and2, 0.25 * (I() - Z(0) - Z(1) + Z(0) * Z(1))) < 1e-15);

  const ZPolynomial c1 = cube_indicator_zpoly(Cube{neg(0), pos(1), pos(3)});
  CHECK(max_abs_difference(c1, 0.125 * ((I() + Z(0)) * (I() - Z(1)) * (I() - Z(3)))) < 1e-15);

  CHECK(cube_indicator_zpoly(Cube{}) == I());

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::uint32_t positive = 0, negative = 0;
    for (int v = 0; v < n; ++v) {
      const auto r = rng() % 3;
      if (r == 0) positive |= 1U << v;
      if (r == 1) negative |= 1U << v;
    }
    const Cube c = Cube::from_masks(positive, negative);
    const auto d = diag(cube_indicator_zpoly(c), n);
    for (std::uint32_t z = 0; z < (1U << n); ++z) {
      const bool truth = (z & positive) == positive && (z & negative) == 0U;
      REQUIRE(d[z] == (truth ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("cube_alternating_sign_zpoly alternates literal signs") {
  // (1/8)(I + Z0)(-I + Z1)(I - Z3)
  const ZPolynomial c1 = cube_alternating_sign_zpoly(Cube{neg(0), pos(1), pos(3)});
  CHECK(max_abs_difference(c1, 0.125 * ((I() + Z(0)) * (Z(1) - I()) * (I() - Z(3)))) < 1e-15);
  CHECK(max_abs_difference(c1, -cube_indicator_zpoly(Cube{neg(0), pos(1), pos(3)})) < 1e-15);

  // -1/4 I + 1/4 (Z0 + Z2 - Z0 Z2)
  const ZPolynomial c3 = cube_alternating_sign_zpoly(Cube{pos(0), pos(2)});
  CHECK(max_abs_difference(c3, -0.25 * I() + 0.25 * (Z(0) + Z(2) - Z(0) * Z(2))) < 1e-15);

  // k = 4: (-1)^2 = +1
  const Cube four{pos(0), pos(1), pos(2), pos(3)};
  CHECK(max_abs_difference(cube_alternating_sign_zpoly(four), cube_indicator_zpoly(four)) < 1e-15);
  // k = 1 keeps its sign, k = 5 flips
  CHECK(cube_alternating_sign_zpoly(Cube{pos(2)}) == cube_indicator_zpoly(Cube{pos(2)}));
  const Cube five{pos(0), neg(1), pos(2), pos(3), neg(4)};
  CHECK(max_abs_difference(cube_alternating_sign_zpoly(five), cube_indicator_zpoly(five)) < 1e-15);
  const Cube six{pos(0), pos(1), pos(2), pos(3), pos(4), pos(5)};
  CHECK(max_abs_difference(cube_alternating_sign_zpoly(six), -cube_indicator_zpoly(six)) < 1e-15);

  CHECK_THROWS_AS(cube_alternating_sign_zpoly(Cube{}), std::invalid_argument);
}

TEST_CASE("xor_compose") {
  const ZPolynomial x0 = literal_zpoly(pos(0));
  CHECK(xor_compose(x0, x0).is_zero());

  // (~x0 & x1) ^ x0, indexed z = (x1 x0): 00 -> 0, 01 -> 1, 10 -> 1, 11 -> 1
  const ZPolynomial h = xor_compose(cube_indicator_zpoly(Cube{neg(0), pos(1)}), x0);
  CHECK(diag(h, 2) == std::vector<double>{0.0, 1.0, 1.0, 1.0});

  // Disjoint cubes: the product term vanishes.
  const ZPolynomial f = cube_indicator_zpoly(Cube{pos(0), pos(1)});
  const ZPolynomial g = cube_indicator_zpoly(Cube{neg(1), pos(2)});
  CHECK(max_abs_difference(xor_compose(f, g), f + g) < 1e-15);
}

TEST_CASE("esop_hamiltonian on P4") {
  const Esop e = violation_esop(p4_example_graph());
  const ZPolynomial hc1 = 0.125 * ((I() + Z(0)) * (Z(1) - I()) * (I() - Z(3)));
  const ZPolynomial hc2 = 0.125 * ((I() - Z(0)) * (-I() - Z(2)) * (I() - Z(3)));
  const ZPolynomial hc3 = -0.25 * I() + 0.25 * (Z(0) + Z(2) - Z(0) * Z(2));
  const ZPolynomial literal = esop_hamiltonian(e, CubeSignMode::kPaperLiteral);
  CHECK(max_abs_difference(literal, hc1 + hc2 + hc3) < 1e-12);
  CHECK(max_abs_difference(esop_hamiltonian(e, CubeSignMode::kSignNormalized), literal) < 1e-12);
}

TEST_CASE("summation equals the xor_compose fold on disjoint ESOPs (n <= 6)") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : connected_corpus(n)) {
      const Esop e = violation_esop(g);
      const auto summed = diag(esop_hamiltonian(e), n);
      const auto folded = diag(esop_hamiltonian_by_fold(e), n);
      for (std::uint32_t z = 0; z < (1U << n); ++z) {
        REQUIRE(std::abs(summed[z] - folded[z]) <= 1e-9);
        REQUIRE(summed[z] == (violates(g, z) ? -1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("esop_hamiltonian falls back to the fold for overlapping cubes") {
  const Esop overlap{{Cube{pos(0)}, Cube{pos(1)}}};
  const auto d = diag(esop_hamiltonian(overlap), 2);
  CHECK(d == std::vector<double>{0.0, -1.0, -1.0, 0.0});
}

TEST_CASE("objective_hmax") {
  CHECK(objective_hmax(1) == literal_zpoly(pos(0)));
  const auto d = diag(objective_hmax(4), 4);
  CHECK(d[0b1111] == 4.0);
  CHECK(d[0] == 0.0);
  for (std::uint32_t z = 0; z < 16; ++z) CHECK(d[z] == popcount(z));
  CHECK_THROWS_AS(objective_hmax(0), std::invalid_argument);
}

TEST_CASE("esop_cost_hamiltonian") {
  SUBCASE("P4, penalty 8, paper literal") {
    const ZPolynomial h = esop_cost_hamiltonian(p4_example_graph(), 8.0, CubeSignMode::kPaperLiteral);
    const DiagonalCost d = zpoly_to_diagonal(h, 4);
    CHECK(d.c_min() == doctest::Approx(-2.0));
    CHECK(d.argmin() == std::vector<std::uint32_t>{0b0011, 0b0110, 0b1100});
    // Independent evaluation: -popcount + 8 * violation.
    const std::vector<double> expected{0, -1, -1, -2, -1, 6, -2, 5, -1, 6, 6, 5, -2, 5, 5, 4};
    for (std::uint32_t z = 0; z < 16; ++z) CHECK(d[z] == doctest::Approx(expected[z]));
    CHECK(d.c_max() == doctest::Approx(6.0));
  }
  SUBCASE("K2, penalty 4") {
    CHECK(diag(esop_cost_hamiltonian(complete_graph(2), 4.0), 2) ==
          std::vector<double>{0.0, -1.0, -1.0, 2.0});
  }
  SUBCASE("edgeless") {
    const ZPolynomial h = esop_cost_hamiltonian(empty_graph(3), 6.0);
    CHECK(h == -objective_hmax(3));
    const DiagonalCost d = zpoly_to_diagonal(h, 3);
    CHECK(d.c_min() == -3.0);
    CHECK(d.argmin() == std::vector<std::uint32_t>{0b111});
  }
  CHECK_THROWS_AS(esop_cost_hamiltonian(complete_graph(2), 0.0), std::invalid_argument);
}

TEST_CASE("standard_cost_hamiltonian") {
  CHECK(diag(standard_cost_hamiltonian(complete_graph(2), 2.0), 2) ==
        std::vector<double>{0.0, -1.0, -1.0, 0.0});
  for (double J : {1.5, 2.0, 7.0}) {
    CHECK(diag(standard_cost_hamiltonian(empty_graph(2), J), 2) ==
          std::vector<double>{0.0, -1.0, -1.0, -2.0});
  }
  CHECK_THROWS_AS(standard_cost_hamiltonian(complete_graph(2), 1.0), std::invalid_argument);

  const Graph g = cycle_graph(5);
  const auto d = diag(standard_cost_hamiltonian(g, 3.0), 5);
  for (std::uint32_t z = 0; z < 32; ++z) {
    CHECK(d[z] == doctest::Approx(-popcount(z) + 3.0 * violated_edges(g, z)));
  }
}

TEST_CASE("both encodings recover the MIS optima on every connected graph n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : connected_corpus(n)) {
      const MisResult mis = brute_force_mis(g);
      std::vector<std::uint32_t> optima;
      for (VertexSubset s : mis.optima) optima.push_back(s.bits);

      const DiagonalCost esop = zpoly_to_diagonal(esop_cost_hamiltonian(g, 2.0 * n), n);
      const DiagonalCost standard = zpoly_to_diagonal(standard_cost_hamiltonian(g, 2.0), n);
      REQUIRE(esop.argmin() == optima);
      REQUIRE(esop.c_min() == doctest::Approx(-mis.alpha));
      REQUIRE(standard.c_min() == doctest::Approx(esop.c_min()));
      REQUIRE(standard.argmin() == optima);
      // Every infeasible assignment costs at least penalty - n > 0.
      for (std::uint32_t z = 0; z < (1U << n); ++z) {
        if (violates(g, z)) REQUIRE(esop[z] >= n - 1e-9);
      }
    }
  }
}

TEST_CASE("zpoly_to_diagonal") {
  CHECK(diag(I(3.0), 2) == std::vector<double>{3.0, 3.0, 3.0, 3.0});
  CHECK(diag(Z(0), 1) == std::vector<double>{1.0, -1.0});
  CHECK_THROWS_AS(zpoly_to_diagonal(Z(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(zpoly_to_diagonal(I(), 0), std::invalid_argument);
  const DiagonalCost d = zpoly_to_diagonal(I(3.0), 2);
  CHECK(d.is_constant());
  CHECK(d.argmin().size() == 4);
}

TEST_CASE("dump_hamiltonian format") {
  const ZPolynomial h = 0.25 * I() - 0.5 * Z(2) + Z(0) * Z(2) + (1.0 / 3.0) * Z(1);
  CHECK(dump_hamiltonian(h) == "0.25 1\n0.333333333333 Z1\n-0.5 Z2\n1 Z0Z2\n");
}
