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

#pragma once

#include <complex>
#include <utility>

// Closed-form single-qubit results, kept to scalar arithmetic on purpose:
// these serve as an oracle for the matrix simulator and must not share
// code with it.
namespace vqsd::analytic {

struct SingleQubitState {
  double rho11 = 1.0;
  double rho22 = 0.0;
  std::complex<double> rho12{0.0, 0.0};  // rho21 = conj(rho12)

  double re_offdiag() const { return rho12.real(); }
  double im_offdiag() const { return rho12.imag(); }
  // throws if trace != 1 or the 2x2 positivity condition fails
  void validate() const;
};

// Zero-state probability of the evolved state as a function of the gate
// angles:
//   pi(theta,phi) = 1/2 + (rho11-rho22)/2 cos(theta)
//                   - R sin(theta) cos(phi) - I sin(theta) sin(phi)
double pi_surface(const SingleQubitState& s, double theta, double phi);

// (pi_minus, pi_plus) = 1/2 -+ sqrt((rho11-rho22)^2/4 + |rho12|^2).
// rho12*rho21 is written |rho12|^2 here, the same thing for a Hermitian
// state.
std::pair<double, double> pi_extrema(const SingleQubitState& s);

// Roots of det(rho - lambda I) = 0; identical closed form to pi_extrema.
std::pair<double, double> eigenvalues_2x2(const SingleQubitState& s);

// Off-diagonal element of the evolved state:
//   e^{-i omega} [ (rho11-rho22)/2 sin(theta)
//                  + rho12 (1+cos(theta))/2 e^{-i phi}
//                  - rho21 (1-cos(theta))/2 e^{+i phi} ]
std::complex<double> evolved_offdiag(const SingleQubitState& s, double theta,
                                     double phi, double omega);

struct ExtremumAngles {
  double theta_minus = 0.0, phi_minus = 0.0;  // where pi reaches pi_minus
  double theta_plus = 0.0, phi_plus = 0.0;    // where pi reaches pi_plus
  // |rho12| = 0: the phi stationarity condition is vacuous and phi = 0 is
  // returned by convention.
  bool degenerate = false;
};

ExtremumAngles extremum_angles(const SingleQubitState& s);

}  // namespace vqsd::analytic
