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

#include "vqsd/objectives.hpp"

#include <algorithm>
#include <stdexcept>

namespace vqsd {

std::string objective_name(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::GlobalD: return "global-d";
    case ObjectiveKind::LocalL: return "local-l";
    case ObjectiveKind::SingleQubitPi: return "single-qubit-pi";
  }
  return "?";
}

ObjectiveKind objective_from_name(const std::string& name) {
  if (name == "global-d") return ObjectiveKind::GlobalD;
  if (name == "local-l") return ObjectiveKind::LocalL;
  if (name == "single-qubit-pi") return ObjectiveKind::SingleQubitPi;
  throw std::invalid_argument("unknown objective: " + name);
}

bool objective_is_maximized(ObjectiveKind k) {
  return k == ObjectiveKind::GlobalD;
}

double global_objective(const BasisDistribution& dist) {
  double d = 0.0;
  for (double p : dist.probs) d += p * p;
  return d;
}

double local_objective(const std::vector<double>& pi) {
  const std::size_t n = pi.size();
  if (n == 0) throw std::invalid_argument("local_objective: empty input");
  for (double p : pi)
    if (p < -1e-9 || p > 1.0 + 1e-9)
      throw std::invalid_argument("local_objective: probability outside [0,1]");
  double l = 0.0;
  for (std::size_t q = 1; q <= n; ++q) {
    const double p = std::clamp(pi[q - 1], 0.0, 1.0);
    double pw = 1.0;
    for (std::size_t deg = 1; deg <= n - q + 1; ++deg) {
      pw *= p;
      l += pw;
    }
  }
  return l;
}

double single_qubit_objective(const DensityMatrix& rho_prime) {
  if (rho_prime.n_qubits() != 1)
    throw std::invalid_argument("single_qubit_objective: requires N = 1");
  return std::clamp(rho_prime.matrix()(0, 0).real(), 0.0, 1.0);
}

std::vector<double> qubit_zero_probabilities(const DensityMatrix& rho) {
  std::vector<double> pi(rho.n_qubits());
  for (std::size_t q = 1; q <= rho.n_qubits(); ++q)
    pi[q - 1] = qubit_zero_probability(rho, q);
  return pi;
}

namespace {

std::vector<double> zero_probs_from_dist(const BasisDistribution& dist) {
  const std::size_t n = dist.n_qubits;
  std::vector<double> pi(n, 0.0);
  for (std::size_t b = 0; b < dist.probs.size(); ++b)
    for (std::size_t q = 1; q <= n; ++q)
      if (((b >> (n - q)) & 1u) == 0u) pi[q - 1] += dist.probs[b];
  return pi;
}

}  // namespace

double evaluate(const DensityMatrix& rho, const AnsatzParams& params,
                ObjectiveKind kind, const EvalOptions& opts) {
  if (params.descriptor.n_qubits != rho.n_qubits())
    throw std::invalid_argument("evaluate: ansatz/state qubit count mismatch");
  if (kind == ObjectiveKind::SingleQubitPi && rho.n_qubits() != 1)
    throw std::invalid_argument("evaluate: single-qubit-pi requires N = 1");

  const DensityMatrix evolved = evolve(rho, build_circuit(params));
  const BasisDistribution dist =
      opts.shots > 0 ? sample_probabilities(evolved, opts.shots, opts.seed)
                     : basis_probabilities(evolved);

  switch (kind) {
    case ObjectiveKind::GlobalD:
      return global_objective(dist);
    case ObjectiveKind::LocalL:
      return local_objective(zero_probs_from_dist(dist));
    case ObjectiveKind::SingleQubitPi:
      return dist.probs[0];
  }
  throw std::logic_error("evaluate: unreachable");
}

}  // namespace vqsd
