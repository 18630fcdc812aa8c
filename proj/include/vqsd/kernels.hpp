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
#include <string_view>

// Data-parallel inner loops on interleaved complex<double> buffers.
// A scalar reference implementation always exists; an AVX2 variant is
// selected at startup when the CPU supports it. Both variants are
// exported so equivalence tests can compare them directly.
namespace vqsd::kern {

using cd = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend detect_backend();
Backend active_backend();
// Throws std::invalid_argument if the CPU lacks the requested backend.
void set_backend(Backend b);

// c[n x m] = a[n x k] * b[k x m], row-major.
void matmul(const cd* a, const cd* b, cd* c, std::size_t n, std::size_t k,
            std::size_t m);
// y += alpha * x
void axpy_real(double alpha, const cd* x, cd* y, std::size_t n);
// sum_i |x[i]|
double abs_sum(const cd* x, std::size_t n);
// Paired row rotation used by the Jacobi eigensolver and its inverse
// transform:  p' = c*p - s*q ;  q' = conj(s)*p + c*q   (c real).
void rot_pair(cd* p, cd* q, double c, cd s, std::size_t n);

namespace scalar {
void matmul(const cd* a, const cd* b, cd* c, std::size_t n, std::size_t k,
            std::size_t m);
void axpy_real(double alpha, const cd* x, cd* y, std::size_t n);
double abs_sum(const cd* x, std::size_t n);
void rot_pair(cd* p, cd* q, double c, cd s, std::size_t n);
}  // namespace scalar

#if defined(VQSD_HAVE_AVX2)
namespace avx2 {
void matmul(const cd* a, const cd* b, cd* c, std::size_t n, std::size_t k,
            std::size_t m);
void axpy_real(double alpha, const cd* x, cd* y, std::size_t n);
double abs_sum(const cd* x, std::size_t n);
void rot_pair(cd* p, cd* q, double c, cd s, std::size_t n);
}  // namespace avx2
#endif

}  // namespace vqsd::kern
