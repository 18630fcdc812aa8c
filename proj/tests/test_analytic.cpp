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
#include "vqsd/analytic.hpp"
#include "vqsd/ansatz.hpp"
#include "vqsd/density_matrix.hpp"

using namespace vqsd;
using analytic::SingleQubitState;

namespace {

SingleQubitState random_state(std::uint64_t seed) {
  auto rho = random_density_matrix(1, 0, seed);
  SingleQubitState s;
  s.rho11 = rho.matrix()(0, 0).real();
  s.rho22 = rho.matrix()(1, 1).real();
  s.rho12 = rho.matrix()(0, 1);
  return s;
}

DensityMatrix to_matrix(const SingleQubitState& s) {
  ComplexMatrix m(2, 2);
  m(0, 0) = s.rho11;
  m(1, 1) = s.rho22;
  m(0, 1) = s.rho12;
  m(1, 0) = std::conj(s.rho12);
  return DensityMatrix::from_matrix(1, m);
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("validate rejects non-states") {
  SingleQubitState bad_trace{0.6, 0.6, {0, 0}};
  CHECK_THROWS_AS(bad_trace.validate(), std::invalid_argument);
  SingleQubitState bad_pos{0.9, 0.1, {0.5, 0}};  // det < 0
  CHECK_THROWS_AS(bad_pos.validate(), std::invalid_argument);
  SingleQubitState ok{0.7, 0.3, {0.1, 0.1}};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("pi extrema hand value") {
  // rho11=rho22=0.5, rho12=0.25: 0.5 -+ 0.25 is not it; the root is
  // sqrt(0 + 0.0625) = 0.25, extrema 0.25 and 0.75.
  SingleQubitState s{0.5, 0.5, {0.25, 0}};
  auto [lo, hi] = analytic::pi_extrema(s);
  CHECK(lo == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(hi == doctest::Approx(0.75).epsilon(1e-15));

  // the 0.146447 / 0.853553 bracket: rho11=rho22=0.5, |rho12|=0.25*sqrt(2)
  SingleQubitState t{0.5, 0.5, {0.25, 0.25}};
  auto [a, b] = analytic::pi_extrema(t);
  CHECK(a == doctest::Approx(0.5 - std::sqrt(0.125)).epsilon(1e-12));
  CHECK(a == doctest::Approx(0.146447).epsilon(1e-5));
  CHECK(b == doctest::Approx(0.853553).epsilon(1e-5));
}

TEST_CASE("pi extrema coincide with the 2x2 eigenvalues exactly") {
  for (int rep = 0; rep < 200; ++rep) {
    auto s = random_state(1000 + rep);
    auto [pm, pp] = analytic::pi_extrema(s);
    auto [lm, lp] = analytic::eigenvalues_2x2(s);
    CHECK(std::abs(pm - lm) < 1e-15);
    CHECK(std::abs(pp - lp) < 1e-15);
    CHECK(pm + pp == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("pi_surface brackets: always within the extrema") {
  for (int rep = 0; rep < 20; ++rep) {
    auto s = random_state(2000 + rep);
    auto [lo, hi] = analytic::pi_extrema(s);
    for (int it = 0; it < 60; ++it)
      for (int ip = 0; ip < 60; ++ip) {
        const double theta = 2.0 * M_PI * it / 60.0;
        const double phi = 2.0 * M_PI * ip / 60.0;
        const double pi = analytic::pi_surface(s, theta, phi);
        CHECK(pi >= lo - 1e-13);
        CHECK(pi <= hi + 1e-13);
      }
  }
}

TEST_CASE("pi_surface matches the matrix simulator") {
  for (int rep = 0; rep < 10; ++rep) {
    auto s = random_state(3000 + rep);
    auto rho = to_matrix(s);
    for (double theta : {0.0, 0.7, 1.9, 3.5, 5.2})
      for (double phi : {0.0, 1.1, 2.6, 4.4}) {
        auto evolved = evolve(rho, single_qubit_gate(phi, theta, 0.0));
        CHECK(std::abs(analytic::pi_surface(s, theta, phi) -
                       evolved.matrix()(0, 0).real()) < 1e-12);
      }
  }
}

TEST_CASE("evolved_offdiag matches the matrix simulator") {
  for (int rep = 0; rep < 10; ++rep) {
    auto s = random_state(4000 + rep);
    auto rho = to_matrix(s);
    for (double theta : {0.3, 2.0, 4.8})
      for (double phi : {0.0, 1.5, 3.9})
        for (double omega : {0.0, 0.8}) {
          auto evolved = evolve(rho, single_qubit_gate(phi, theta, omega));
          CHECK(std::abs(analytic::evolved_offdiag(s, theta, phi, omega) -
                         evolved.matrix()(0, 1)) < 1e-12);
        }
  }
}

TEST_CASE("extremum angles reach the extrema and kill the off-diagonal") {
  for (int rep = 0; rep < 100; ++rep) {
    auto s = random_state(5000 + rep);
    auto [lo, hi] = analytic::pi_extrema(s);
    auto ang = analytic::extremum_angles(s);
    CHECK(analytic::pi_surface(s, ang.theta_minus, ang.phi_minus) ==
          doctest::Approx(lo).epsilon(1e-12));
    CHECK(analytic::pi_surface(s, ang.theta_plus, ang.phi_plus) ==
          doctest::Approx(hi).epsilon(1e-12));
    // any pi extremizer also diagonalizes the state
    CHECK(std::abs(analytic::evolved_offdiag(s, ang.theta_minus, ang.phi_minus,
                                             0.0)) < 1e-10);
    CHECK(std::abs(analytic::evolved_offdiag(s, ang.theta_plus, ang.phi_plus,
                                             0.0)) < 1e-10);
  }
}

TEST_CASE("degenerate states: diagonal input needs no rotation") {
  SingleQubitState s{0.8, 0.2, {0, 0}};
  auto ang = analytic::extremum_angles(s);
  CHECK(ang.degenerate);
  CHECK(analytic::pi_surface(s, ang.theta_minus, ang.phi_minus) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK(analytic::pi_surface(s, ang.theta_plus, ang.phi_plus) ==
        doctest::Approx(0.8).epsilon(1e-14));
}

}  // TEST_SUITE
