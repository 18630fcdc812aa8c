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

#include <cstdint>
#include <string>

#include "vqsd/ansatz.hpp"
#include "vqsd/density_matrix.hpp"

namespace vqsd {

/// GlobalD is maximized; LocalL and SingleQubitPi are minimized. The
/// optimizer normalizes everything to minimization internally.
enum class ObjectiveKind { GlobalD, LocalL, SingleQubitPi };

std::string objective_name(ObjectiveKind k);
ObjectiveKind objective_from_name(const std::string& name);
bool objective_is_maximized(ObjectiveKind k);

// Sum of squared basis probabilities.
double global_objective(const BasisDistribution& dist);

// Double sum over single-qubit zero-state probabilities: qubit q
// contributes powers 1..N-q+1 of pi_q.
double local_objective(const std::vector<double>& pi);

// Zero-state probability of a single-qubit state.
double single_qubit_objective(const DensityMatrix& rho_prime);

std::vector<double> qubit_zero_probabilities(const DensityMatrix& rho);

struct EvalOptions {
  std::size_t shots = 0;  // 0 = exact probabilities
  std::uint64_t seed = 0;
};

// Builds the circuit, evolves rho, computes the selected objective.
double evaluate(const DensityMatrix& rho, const AnsatzParams& params,
                ObjectiveKind kind, const EvalOptions& opts = {});

}  // namespace vqsd
