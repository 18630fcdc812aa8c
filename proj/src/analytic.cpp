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

#include "vqsd/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace vqsd::analytic {

namespace {
constexpr double kDegenerateTol = 1e-12;
}

void SingleQubitState::validate() const {
  if (std::abs(rho11 + rho22 - 1.0) > 1e-12)
    throw std::invalid_argument("SingleQubitState: trace is not 1");
  if (rho11 < -1e-12 || rho22 < -1e-12)
    throw std::invalid_argument("SingleQubitState: negative population");
  if (rho11 * rho22 - std::norm(rho12) < -1e-12)
    throw std::invalid_argument("SingleQubitState: not positive semidefinite");
}

double pi_surface(const SingleQubitState& s, double theta, double phi) {
  const double delta = s.rho11 - s.rho22;
  return 0.5 + 0.5 * delta * std::cos(theta) -
         s.re_offdiag() * std::sin(theta) * std::cos(phi) -
         s.im_offdiag() * std::sin(theta) * std::sin(phi);
}

std::pair<double, double> pi_extrema(const SingleQubitState& s) {
  const double delta = s.rho11 - s.rho22;
  const double root = std::sqrt(0.25 * delta * delta + std::norm(s.rho12));
  return {0.5 - root, 0.5 + root};
}

std::pair<double, double> eigenvalues_2x2(const SingleQubitState& s) {
  const double delta = s.rho11 - s.rho22;
  const double root = std::sqrt(0.25 * delta * delta + std::norm(s.rho12));
  return {0.5 - root, 0.5 + root};
}

std::complex<double> evolved_offdiag(const SingleQubitState& s, double theta,
                                     double phi, double omega) {
  using cd = std::complex<double>;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const cd rho21 = std::conj(s.rho12);
  const cd inner = 0.5 * (s.rho11 - s.rho22) * st +
                   s.rho12 * (0.5 * (1.0 + ct)) * std::polar(1.0, -phi) -
                   rho21 * (0.5 * (1.0 - ct)) * std::polar(1.0, phi);
  return std::polar(1.0, -omega) * inner;
}

ExtremumAngles extremum_angles(const SingleQubitState& s) {
  const double delta = s.rho11 - s.rho22;
  ExtremumAngles out;

  if (std::abs(s.rho12) <= kDegenerateTol) {
    out.degenerate = true;
    // pi(theta, 0) = 1/2 + delta/2 cos(theta): extremal at sin(theta) = 0.
    out.theta_minus = delta <= 0.0 ? 0.0 : M_PI;
    out.theta_plus = delta <= 0.0 ? M_PI : 0.0;
    return out;
  }

  const double r = s.re_offdiag();
  const double im = s.im_offdiag();
  const double phi0 = std::atan2(im, r);

  // The stationarity conditions leave four candidate points; evaluate the
  // surface and keep the min/max branch.
  double best_min = 2.0, best_max = -1.0;
  for (double phi : {phi0, phi0 + M_PI}) {
    const double k = r * std::cos(phi) + im * std::sin(phi);
    const double theta0 = std::atan2(-2.0 * k, delta);
    for (double theta : {theta0, theta0 + M_PI}) {
      const double val = pi_surface(s, theta, phi);
      if (val < best_min) {
        best_min = val;
        out.theta_minus = theta;
        out.phi_minus = phi;
      }
      if (val > best_max) {
        best_max = val;
        out.theta_plus = theta;
        out.phi_plus = phi;
      }
    }
  }
  return out;
}

}  // namespace vqsd::analytic
