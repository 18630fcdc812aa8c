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

#include <vector>

#include "vqsd/complex_matrix.hpp"

namespace vqsd {

enum class AnsatzKind { UniversalPauli, BrickWall };

struct AnsatzDescriptor {
  AnsatzKind kind = AnsatzKind::UniversalPauli;
  std::size_t n_qubits = 1;
  std::size_t blocks = 1;  // BrickWall only

  std::size_t param_count() const;
};

/// Flat angle vector plus its ansatz descriptor. Brick-wall packing is
/// block-major, then qubit, then (phi, theta, omega).
struct AnsatzParams {
  AnsatzDescriptor descriptor;
  std::vector<double> theta;

  void validate() const;  // throws on length mismatch / non-finite entries
};

// The general 2x2 unitary
//   [[cos(t/2) e^{-i(phi+omega)/2}, -sin(t/2) e^{i(phi-omega)/2}],
//    [sin(t/2) e^{-i(phi-omega)/2},  cos(t/2) e^{i(phi+omega)/2}]]
ComplexMatrix single_qubit_gate(double phi, double theta, double omega);

// CNOT on n qubits, 1-based indices, qubit 1 = most significant bit.
ComplexMatrix cnot_matrix(std::size_t n, std::size_t control,
                          std::size_t target);

// Single-qubit layer followed by the linear CNOT ladder
// CNOT(n-1,n) ... CNOT(1,2), as one dense unitary.
ComplexMatrix brick_wall_block(std::size_t n,
                               const std::vector<double>& block_params);

ComplexMatrix brick_wall_circuit(const AnsatzParams& params);
ComplexMatrix universal_pauli_circuit(const AnsatzParams& params);

// Dispatch on descriptor.kind.
ComplexMatrix build_circuit(const AnsatzParams& params);

}  // namespace vqsd
