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

#include "vqsd/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "vqsd/pauli.hpp"

namespace vqsd {

std::size_t AnsatzDescriptor::param_count() const {
  if (kind == AnsatzKind::UniversalPauli)
    return (std::size_t{1} << (2 * n_qubits)) - 1;  // 4^N - 1
  return 3 * n_qubits * blocks;
}

void AnsatzParams::validate() const {
  if (theta.size() != descriptor.param_count())
    throw std::invalid_argument("AnsatzParams: parameter count mismatch");
  for (double t : theta)
    if (!std::isfinite(t))
      throw std::invalid_argument("AnsatzParams: non-finite parameter");
}

ComplexMatrix single_qubit_gate(double phi, double theta, double omega) {
  const double ch = std::cos(theta / 2.0);
  const double sh = std::sin(theta / 2.0);
  ComplexMatrix u(2, 2);
  u(0, 0) = ch * std::polar(1.0, -(phi + omega) / 2.0);
  u(0, 1) = -sh * std::polar(1.0, (phi - omega) / 2.0);
  u(1, 0) = sh * std::polar(1.0, -(phi - omega) / 2.0);
  u(1, 1) = ch * std::polar(1.0, (phi + omega) / 2.0);
  return u;
}

ComplexMatrix cnot_matrix(std::size_t n, std::size_t control,
                          std::size_t target) {
  if (control < 1 || control > n || target < 1 || target > n ||
      control == target)
    throw std::invalid_argument("cnot_matrix: bad qubit indices");
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t cbit = n - control;
  const std::size_t tbit = n - target;
  ComplexMatrix m(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t out = ((b >> cbit) & 1u) ? (b ^ (std::size_t{1} << tbit)) : b;
    m(out, b) = 1.0;
  }
  return m;
}

namespace {

// CNOT(n-1,n) ... CNOT(1,2) applied after the single-qubit layer; cached
// per qubit count.
const ComplexMatrix& cnot_ladder(std::size_t n) {
  static ComplexMatrix cache[7];
  static bool built[7] = {};
  if (n < 1 || n > 6) throw std::invalid_argument("cnot_ladder: n out of range");
  if (!built[n]) {
    ComplexMatrix l = ComplexMatrix::identity(std::size_t{1} << n);
    for (std::size_t q = 1; q + 1 <= n; ++q)
      l = mul(cnot_matrix(n, q, q + 1), l);
    cache[n] = std::move(l);
    built[n] = true;
  }
  return cache[n];
}

}  // namespace

ComplexMatrix brick_wall_block(std::size_t n,
                               const std::vector<double>& block_params) {
  if (block_params.size() != 3 * n)
    throw std::invalid_argument("brick_wall_block: expected 3n parameters");
  ComplexMatrix layer =
      single_qubit_gate(block_params[0], block_params[1], block_params[2]);
  for (std::size_t q = 1; q < n; ++q)
    layer = kron(layer, single_qubit_gate(block_params[3 * q],
                                          block_params[3 * q + 1],
                                          block_params[3 * q + 2]));
  if (n == 1) return layer;
  return mul(cnot_ladder(n), layer);
}

ComplexMatrix brick_wall_circuit(const AnsatzParams& params) {
  if (params.descriptor.kind != AnsatzKind::BrickWall)
    throw std::invalid_argument("brick_wall_circuit: wrong ansatz kind");
  params.validate();
  const std::size_t n = params.descriptor.n_qubits;
  const std::size_t per_block = 3 * n;
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << n);
  // Block 1 acts first on the state, so it sits rightmost in the product.
  for (std::size_t j = 0; j < params.descriptor.blocks; ++j) {
    std::vector<double> bp(params.theta.begin() + j * per_block,
                           params.theta.begin() + (j + 1) * per_block);
    u = mul(brick_wall_block(n, bp), u);
  }
  return u;
}

ComplexMatrix universal_pauli_circuit(const AnsatzParams& params) {
  if (params.descriptor.kind != AnsatzKind::UniversalPauli)
    throw std::invalid_argument("universal_pauli_circuit: wrong ansatz kind");
  params.validate();
  const auto strings = enumerate_pauli_group(params.descriptor.n_qubits);
  return expm_hermitian_generator(build_generator(params.theta, strings));
}

ComplexMatrix build_circuit(const AnsatzParams& params) {
  return params.descriptor.kind == AnsatzKind::UniversalPauli
             ? universal_pauli_circuit(params)
             : brick_wall_circuit(params);
}

}  // namespace vqsd
