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
#include <vector>

#include "vqsd/complex_matrix.hpp"

namespace vqsd {

/// Exact computational-basis distribution of an N-qubit state. Index b
/// corresponds to the bit string q1...qN with q1 the most significant bit.
struct BasisDistribution {
  std::size_t n_qubits = 0;
  std::vector<double> probs;
};

/// Hermitian, unit-trace, positive-semidefinite matrix over N qubits.
class DensityMatrix {
 public:
  // Full validation: Hermiticity, trace 1, PSD (via eigh).
  static DensityMatrix from_matrix(std::size_t n_qubits, ComplexMatrix m);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  friend DensityMatrix random_density_matrix(std::size_t, std::size_t,
                                             std::uint64_t);
  friend DensityMatrix evolve(const DensityMatrix&, const ComplexMatrix&);
  DensityMatrix(std::size_t n_qubits, ComplexMatrix m)
      : n_qubits_(n_qubits), matrix_(std::move(m)) {}

  std::size_t n_qubits_ = 0;
  ComplexMatrix matrix_;
};

// Ginibre construction G G^dagger / Tr, with G a (2^n x rank) matrix of
// standard complex Gaussians drawn from the seeded generator. rank 0
// means full rank.
DensityMatrix random_density_matrix(std::size_t n_qubits, std::size_t rank,
                                    std::uint64_t seed);

// U rho U^dagger; rejects non-unitary U (defect > 1e-8).
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

double purity(const DensityMatrix& rho);
BasisDistribution basis_probabilities(const DensityMatrix& rho);
// q is 1-based, qubit 1 = most significant bit.
double qubit_zero_probability(const DensityMatrix& rho, std::size_t q);
double off_diagonal_average(const DensityMatrix& rho);
BasisDistribution sample_probabilities(const DensityMatrix& rho,
                                       std::size_t shots, std::uint64_t seed);

}  // namespace vqsd
