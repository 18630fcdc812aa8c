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

#if defined(VQSD_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "vqsd/kernels.hpp"

namespace vqsd::kern::avx2 {

namespace {

inline double reduce_add(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// [re0 im0 re1 im1] -> [im0 re0 im1 re1]
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

}  // namespace

void matmul(const cd* a, const cd* b, cd* c, std::size_t n, std::size_t k,
            std::size_t m) {
  std::memset(c, 0, n * m * sizeof(cd));
  const std::size_t mv = m & ~std::size_t{1};  // complex pairs per vector
  for (std::size_t i = 0; i < n; ++i) {
    const cd* arow = a + i * k;
    double* crow = reinterpret_cast<double*>(c + i * m);
    for (std::size_t l = 0; l < k; ++l) {
      const cd av = arow[l];
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(av.real());
      const __m256d ai = _mm256_set1_pd(av.imag());
      const double* brow = reinterpret_cast<const double*>(b + l * m);
      std::size_t j = 0;
      for (; j < mv; j += 2) {
        __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        __m256d t = _mm256_mul_pd(ai, swap_re_im(bv));
        __m256d prod = _mm256_fmaddsub_pd(ar, bv, t);
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, prod));
      }
      for (; j < m; ++j) {
        cd* cj = c + i * m + j;
        *cj += av * b[l * m + j];
      }
    }
  }
}

void axpy_real(double alpha, const cd* x, cd* y, std::size_t n) {
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  const std::size_t d = 2 * n;
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= d; i += 4) {
    __m256d yv = _mm256_loadu_pd(ys + i);
    _mm256_storeu_pd(ys + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(xs + i), yv));
  }
  for (; i < d; ++i) ys[i] += alpha * xs[i];
}

double abs_sum(const cd* x, std::size_t n) {
  const double* xs = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xs + 2 * i);
    __m256d sq = _mm256_mul_pd(v, v);
    // |z|^2 duplicated into both lanes of each complex slot
    __m256d mag2 = _mm256_add_pd(sq, swap_re_im(sq));
    acc = _mm256_fmadd_pd(half, _mm256_sqrt_pd(mag2), acc);
  }
  double s = reduce_add(acc);
  for (; i < n; ++i) s += std::abs(x[i]);
  return s;
}

void rot_pair(cd* p, cd* q, double c, cd s, std::size_t n) {
  double* ps = reinterpret_cast<double*>(p);
  double* qs = reinterpret_cast<double*>(q);
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d pv = _mm256_loadu_pd(ps + 2 * i);
    __m256d qv = _mm256_loadu_pd(qs + 2 * i);
    // s*q = fmaddsub(sr, q, si*swap(q)); conj(s)*p = fmsubadd(sr, p, si*swap(p))
    __m256d sq = _mm256_fmaddsub_pd(sr, qv, _mm256_mul_pd(si, swap_re_im(qv)));
    __m256d csp = _mm256_fmsubadd_pd(sr, pv, _mm256_mul_pd(si, swap_re_im(pv)));
    _mm256_storeu_pd(ps + 2 * i, _mm256_sub_pd(_mm256_mul_pd(cv, pv), sq));
    _mm256_storeu_pd(qs + 2 * i, _mm256_fmadd_pd(cv, qv, csp));
  }
  const cd sc = std::conj(s);
  for (; i < n; ++i) {
    const cd pi = p[i];
    const cd qi = q[i];
    p[i] = c * pi - s * qi;
    q[i] = sc * pi + c * qi;
  }
}

}  // namespace vqsd::kern::avx2

#endif  // VQSD_HAVE_AVX2
