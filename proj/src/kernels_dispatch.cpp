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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "vqsd/kernels.hpp"

namespace vqsd::kern {

namespace {

Backend pick_initial() {
  Backend b = detect_backend();
  if (const char* env = std::getenv("VQSD_BACKEND")) {
    const std::string v(env);
    if (v == "scalar") b = Backend::Scalar;
    else if (v == "avx2" && backend_supported(Backend::Avx2)) b = Backend::Avx2;
  }
  return b;
}

std::atomic<Backend> g_backend{pick_initial()};

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend b) {
  if (b == Backend::Scalar) return true;
#if defined(VQSD_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() {
  return backend_supported(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw std::invalid_argument("kernel backend not supported on this CPU: " +
                                std::string(backend_name(b)));
  g_backend.store(b, std::memory_order_relaxed);
}

void matmul(const cd* a, const cd* b, cd* c, std::size_t n, std::size_t k,
            std::size_t m) {
#if defined(VQSD_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::matmul(a, b, c, n, k, m);
#endif
  scalar::matmul(a, b, c, n, k, m);
}

void axpy_real(double alpha, const cd* x, cd* y, std::size_t n) {
#if defined(VQSD_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::axpy_real(alpha, x, y, n);
#endif
  scalar::axpy_real(alpha, x, y, n);
}

double abs_sum(const cd* x, std::size_t n) {
#if defined(VQSD_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::abs_sum(x, n);
#endif
  return scalar::abs_sum(x, n);
}

void rot_pair(cd* p, cd* q, double c, cd s, std::size_t n) {
#if defined(VQSD_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::rot_pair(p, q, c, s, n);
#endif
  scalar::rot_pair(p, q, c, s, n);
}

}  // namespace vqsd::kern
