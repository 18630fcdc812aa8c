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

#include "vqsd/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vqsd/kernels.hpp"

namespace vqsd {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cd{0.0, 0.0}) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
  if (data_.size() != rows * cols)
    throw std::invalid_argument("ComplexMatrix: entry count mismatch");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

void ComplexMatrix::scale(cd factor) {
  for (auto& v : data_) v *= factor;
}

void ComplexMatrix::add_scaled(double alpha, const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("add_scaled: shape mismatch");
  kern::axpy_real(alpha, other.data_.data(), data_.data(), data_.size());
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!square()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m,
                   0.5 * std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return square() && hermiticity_defect() <= tol;
}

double ComplexMatrix::unitarity_defect() const {
  if (!square()) return std::numeric_limits<double>::infinity();
  ComplexMatrix prod = mul(adjoint(), *this);
  for (std::size_t i = 0; i < rows_; ++i) prod(i, i) -= 1.0;
  return prod.max_abs();
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mul: inner dimension mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  kern::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

cd trace(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace: non-square matrix");
  cd t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cd av = a(i, j);
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = av * b(k, l);
    }
  return out;
}

namespace {

double max_offdiag(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q)
      m = std::max(m, std::abs(a(p, q)));
  return m;
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& h) {
  if (!h.square()) throw std::invalid_argument("eigh: non-square matrix");
  const double defect = h.hermiticity_defect();
  if (defect > kHermitianTol)
    throw std::invalid_argument("eigh: matrix is not Hermitian within tolerance");

  const std::size_t n = h.rows();
  // Work on the symmetrized copy so roundoff-level asymmetry cannot leak
  // into the iteration.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

  // vh accumulates V^dagger as rows, so every rotation is a contiguous
  // paired-row update.
  ComplexMatrix vh = ComplexMatrix::identity(n);

  double scale = a.max_abs();
  if (scale == 0.0) scale = 1.0;
  const double stop = 1e-15 * scale;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps && max_offdiag(a) > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= stop) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cd s = (t * c) * (apq / r);

        // Row update gives J^dagger A; Hermiticity recovers the columns.
        kern::rot_pair(a.data() + p * n, a.data() + q * n, c, s, n);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a(i, p) = std::conj(a(p, i));
          a(i, q) = std::conj(a(q, i));
        }
        const cd cpp = a(p, p), cpq = a(p, q);
        const cd cqp = a(q, p), cqq = a(q, q);
        a(p, p) = (c * cpp - std::conj(s) * cpq).real();
        a(q, q) = (s * cqp + c * cqq).real();
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        kern::rot_pair(vh.data() + p * n, vh.data() + q * n, c, s, n);
      }
    }
  }

  // Ascending eigenvalues with a stable permutation.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, k) = std::conj(vh(order[k], i));
  }
  return out;
}

ComplexMatrix unitary_from_eigh(const EigenDecomposition& eig) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix phased = eig.eigenvectors;  // V * diag(e^{-i lambda})
  for (std::size_t k = 0; k < n; ++k) {
    const cd phase = std::polar(1.0, -eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) phased(i, k) *= phase;
  }
  return mul(phased, eig.eigenvectors.adjoint());
}

ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h) {
  return unitary_from_eigh(eigh(h));
}

}  // namespace vqsd
