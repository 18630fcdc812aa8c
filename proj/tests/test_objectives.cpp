// Copyright 2026-present the vqsd project
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
#include "test_util.hpp"
#include "vqsd/objectives.hpp"

using namespace vqsd;

TEST_SUITE("objectives") {

TEST_CASE("objective names round-trip") {
  for (auto k : {ObjectiveKind::GlobalD, ObjectiveKind::LocalL,
                 ObjectiveKind::SingleQubitPi})
    CHECK(objective_from_name(objective_name(k)) == k);
  CHECK_THROWS_AS(objective_from_name("bogus"), std::invalid_argument);
  CHECK(objective_is_maximized(ObjectiveKind::GlobalD));
  CHECK(!objective_is_maximized(ObjectiveKind::LocalL));
}

TEST_CASE("global objective hand values") {
  BasisDistribution pure{1, {1.0, 0.0}};
  CHECK(global_objective(pure) == doctest::Approx(1.0).epsilon(1e-15));
  BasisDistribution flat{2, {0.25, 0.25, 0.25, 0.25}};
  CHECK(global_objective(flat) == doctest::Approx(0.25).epsilon(1e-15));
  BasisDistribution mixed{1, {0.7, 0.3}};
  CHECK(global_objective(mixed) == doctest::Approx(0.58).epsilon(1e-15));
}

TEST_CASE("local objective hand values") {
  // N=3, pi=(0.5,0.5,0.5): (0.5+0.25+0.125)+(0.5+0.25)+0.5 = 2.125
  CHECK(local_objective({0.5, 0.5, 0.5}) == doctest::Approx(2.125).epsilon(1e-15));
  // N=2, pi=(1,1): (1+1)+1 = 3
  CHECK(local_objective({1.0, 1.0}) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(local_objective({0.0, 0.0}) == 0.0);
  // N=1 reduces to pi itself
  CHECK(local_objective({0.3}) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK_THROWS_AS(local_objective({}), std::invalid_argument);
  CHECK_THROWS_AS(local_objective({1.5}), std::invalid_argument);
  CHECK_THROWS_AS(local_objective({-0.1}), std::invalid_argument);
}

TEST_CASE("single-qubit objective is the top-left entry") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.35;
  m(1, 1) = 0.65;
  m(0, 1) = cd{0.1, 0.05};
  m(1, 0) = cd{0.1, -0.05};
  auto rho = DensityMatrix::from_matrix(1, m);
  CHECK(single_qubit_objective(rho) == doctest::Approx(0.35).epsilon(1e-15));
}

TEST_CASE("qubit_zero_probabilities agrees with the marginal helper") {
  auto rho = random_density_matrix(3, 0, 61);
  auto pi = qubit_zero_probabilities(rho);
  REQUIRE(pi.size() == 3);
  for (std::size_t q = 1; q <= 3; ++q)
    CHECK(pi[q - 1] == doctest::Approx(qubit_zero_probability(rho, q)).epsilon(1e-14));
}

TEST_CASE("evaluate at identity parameters matches the direct objective") {
  auto rho = random_density_matrix(2, 0, 303);
  AnsatzParams p;
  p.descriptor = {AnsatzKind::BrickWall, 2, 1};
  p.theta.assign(6, 0.0);
  // zero-parameter block is the CNOT ladder, so evolve explicitly to compare
  auto evolved = evolve(rho, build_circuit(p));
  CHECK(evaluate(rho, p, ObjectiveKind::GlobalD) ==
        doctest::Approx(global_objective(basis_probabilities(evolved)))
            .epsilon(1e-14));
  CHECK(evaluate(rho, p, ObjectiveKind::LocalL) ==
        doctest::Approx(local_objective(qubit_zero_probabilities(evolved)))
            .epsilon(1e-14));
}

TEST_CASE("global objective never exceeds purity under any circuit") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rep % 3;
    auto rho = random_density_matrix(n, 0, 9000 + rep);
    AnsatzParams p;
    p.descriptor = {AnsatzKind::BrickWall, n, 2};
    p.theta.resize(p.descriptor.param_count());
    for (auto& v : p.theta) v = u(rng);
    CHECK(evaluate(rho, p, ObjectiveKind::GlobalD) <= purity(rho) + 1e-9);
  }
}

TEST_CASE("sampled evaluation is deterministic per seed and approaches exact") {
  auto rho = random_density_matrix(2, 0, 13);
  AnsatzParams p;
  p.descriptor = {AnsatzKind::BrickWall, 2, 2};
  p.theta.assign(12, 0.2);

  EvalOptions a{2000, 42}, b{2000, 42}, c{2000, 43};
  CHECK(evaluate(rho, p, ObjectiveKind::GlobalD, a) ==
        evaluate(rho, p, ObjectiveKind::GlobalD, b));
  CHECK(evaluate(rho, p, ObjectiveKind::GlobalD, a) !=
        evaluate(rho, p, ObjectiveKind::GlobalD, c));

  EvalOptions big{2000000, 1};
  const double exact = evaluate(rho, p, ObjectiveKind::LocalL);
  CHECK(std::abs(evaluate(rho, p, ObjectiveKind::LocalL, big) - exact) < 5e-3);
}

TEST_CASE("single-qubit evaluate requires one qubit") {
  auto rho = random_density_matrix(2, 0, 2);
  AnsatzParams p;
  p.descriptor = {AnsatzKind::BrickWall, 2, 1};
  p.theta.assign(6, 0.0);
  CHECK_THROWS_AS(evaluate(rho, p, ObjectiveKind::SingleQubitPi),
                  std::invalid_argument);
}

}  // TEST_SUITE
