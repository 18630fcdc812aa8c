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

#include "vqsd/kernels.hpp"

#include <cmath>
#include <cstring>

namespace vqsd::kern::scalar {

void matmul(const cd* a, const cd* b, cd* c, std::size_t n, std::size_t k,
            std::size_t m) {
  std::memset(c, 0, n * m * sizeof(cd));
  for (std::size_t i = 0; i < n; ++i) {
    const cd* arow = a + i * k;
    cd* crow = c + i * m;
    for (std::size_t l = 0; l < k; ++l) {
      const cd av = arow[l];
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      const cd* brow = b + l * m;
      for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
    }
  }
}

void axpy_real(double alpha, const cd* x, cd* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double abs_sum(const cd* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(x[i]);
  return s;
}

void rot_pair(cd* p, cd* q, double c, cd s, std::size_t n) {
  const cd sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cd pi = p[i];
    const cd qi = q[i];
    p[i] = c * pi - s * qi;
    q[i] = sc * pi + c * qi;
  }
}

}  // namespace vqsd::kern::scalar
