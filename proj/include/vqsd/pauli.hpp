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

#include <string>
#include <vector>

#include "vqsd/complex_matrix.hpp"

namespace vqsd {

enum class PauliLetter : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

/// A length-N word over {I,X,Y,Z}; qubit 1 is the first letter and maps
/// to the most significant index of the tensor product.
struct PauliString {
  std::vector<PauliLetter> letters;

  std::size_t n_qubits() const { return letters.size(); }
  std::string to_string() const;
  static PauliString from_string(const std::string& s);
};

// All 4^n - 1 non-identity words in base-4 counting order (I<X<Y<Z),
// qubit N being the fastest digit. Valid for 1 <= n <= 6.
std::vector<PauliString> enumerate_pauli_group(std::size_t n);

const ComplexMatrix& pauli_letter_matrix(PauliLetter l);
ComplexMatrix pauli_to_matrix(const PauliString& p);

// sum_g thetas[g] * matrix(strings[g]); Hermitian for real weights.
ComplexMatrix build_generator(const std::vector<double>& thetas,
                              const std::vector<PauliString>& strings);

}  // namespace vqsd
