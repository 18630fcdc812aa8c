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

#include "vqsd/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "vqsd/kernels.hpp"

namespace vqsd {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-9;
constexpr double kUnitaryTol = 1e-8;

}  // namespace

DensityMatrix DensityMatrix::from_matrix(std::size_t n_qubits,
                                         ComplexMatrix m) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (n_qubits < 1 || m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("DensityMatrix: dimension does not match qubit count");
  if (!m.is_hermitian())
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(trace(m) - cd{1.0, 0.0}) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  auto eig = eigh(m);
  if (eig.eigenvalues.front() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  return DensityMatrix(n_qubits, std::move(m));
}

DensityMatrix random_density_matrix(std::size_t n_qubits, std::size_t rank,
                                    std::uint64_t seed) {
  if (n_qubits < 1)
    throw std::invalid_argument("random_density_matrix: need n >= 1");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rank == 0) rank = dim;
  if (rank > dim)
    throw std::invalid_argument("random_density_matrix: rank out of range");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = cd{gauss(rng), gauss(rng)};

  ComplexMatrix rho = mul(g, g.adjoint());
  const double tr = trace(rho).real();
  rho.scale(cd{1.0 / tr, 0.0});
  // Exact Hermiticity by construction up to roundoff; symmetrize anyway.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      const cd v = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = v;
      rho(j, i) = std::conj(v);
    }
  return DensityMatrix(n_qubits, std::move(rho));
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim())
    throw std::invalid_argument("evolve: unitary dimension mismatch");
  if (u.unitarity_defect() > kUnitaryTol)
    throw std::invalid_argument("evolve: matrix is not unitary within tolerance");
  return DensityMatrix(rho.n_qubits(), mul(mul(u, rho.matrix()), u.adjoint()));
}

double purity(const DensityMatrix& rho) {
  return trace(mul(rho.matrix(), rho.matrix())).real();
}

BasisDistribution basis_probabilities(const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  BasisDistribution dist;
  dist.n_qubits = rho.n_qubits();
  dist.probs.resize(dim);
  double sum = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    const double p = std::clamp(rho.matrix()(b, b).real(), 0.0, 1.0);
    dist.probs[b] = p;
    sum += p;
  }
  if (sum > 0.0)
    for (auto& p : dist.probs) p /= sum;
  return dist;
}

double qubit_zero_probability(const DensityMatrix& rho, std::size_t q) {
  const std::size_t n = rho.n_qubits();
  if (q < 1 || q > n)
    throw std::invalid_argument("qubit_zero_probability: qubit index out of range");
  const auto dist = basis_probabilities(rho);
  const std::size_t bit = n - q;  // qubit 1 is the most significant bit
  double p = 0.0;
  for (std::size_t b = 0; b < dist.probs.size(); ++b)
    if (((b >> bit) & 1u) == 0u) p += dist.probs[b];
  return p;
}

double off_diagonal_average(const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  double diag = 0.0;
  for (std::size_t i = 0; i < dim; ++i) diag += std::abs(rho.matrix()(i, i));
  const double total = kern::abs_sum(rho.matrix().data(), dim * dim);
  const double off = std::max(0.0, total - diag);
  return off / (double(dim) * double(dim - 1));
}

BasisDistribution sample_probabilities(const DensityMatrix& rho,
                                       std::size_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_probabilities: shots must be >= 1");
  const auto exact = basis_probabilities(rho);

  std::vector<double> cdf(exact.probs.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < exact.probs.size(); ++b) {
    acc += exact.probs[b];
    cdf[b] = acc;
  }
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::size_t> counts(exact.probs.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = unif(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    ++counts[std::size_t(it - cdf.begin())];
  }

  BasisDistribution dist;
  dist.n_qubits = exact.n_qubits;
  dist.probs.resize(counts.size());
  for (std::size_t b = 0; b < counts.size(); ++b)
    dist.probs[b] = double(counts[b]) / double(shots);
  return dist;
}

}  // namespace vqsd
