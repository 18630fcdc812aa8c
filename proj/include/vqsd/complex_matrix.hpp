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
#include <cstddef>
#include <vector>

namespace vqsd {

using cd = std::complex<double>;

// Tolerance below which a matrix counts as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Dense row-major complex matrix with value semantics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const cd* data() const { return data_.data(); }
  cd* data() { return data_.data(); }
  const std::vector<cd>& entries() const { return data_; }

  ComplexMatrix adjoint() const;
  void scale(cd factor);
  // this += alpha * other, alpha real
  void add_scaled(double alpha, const ComplexMatrix& other);

  double max_abs() const;
  // max_ij |a_ij - b_ij|
  static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
  // max-abs deviation of (a - a^dagger)/2
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const;
  // max-abs of U^dagger U - I
  double unitarity_defect() const;

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
cd trace(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending eigenvalues and a unitary whose columns are the eigenvectors.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Rejects inputs
// whose hermiticity defect exceeds kHermitianTol.
EigenDecomposition eigh(const ComplexMatrix& h);

// exp(-i h) for Hermitian h, via the spectral decomposition.
ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h);

// Same, reusing a precomputed decomposition of h.
ComplexMatrix unitary_from_eigh(const EigenDecomposition& eig);

}  // namespace vqsd
