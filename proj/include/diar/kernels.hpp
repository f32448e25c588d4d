// Copyright 2026 The diarkit Authors
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

#include <cstddef>

// Double-precision vector kernels behind the hot loops (matrix products,
// convolution, filterbank application, power sums). A scalar reference
// implementation always exists; AVX2 (x86-64) and NEON (aarch64) variants are
// selected at runtime. SIMD variants may reassociate reductions, so results
// can differ from the scalar path by normal rounding; the equivalence tests
// pin the tolerance.
namespace diar::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

// Backend chosen for this process. Resolved once on first use: best
// supported SIMD variant, unless the DIAR_KERNELS environment variable
// ("scalar", "avx2", "neon") requests otherwise.
Backend active_backend();
const char* backend_name(Backend b);

// Force a specific backend; returns false (and leaves the selection
// unchanged) if it is not supported on this machine.
bool set_backend(Backend b);
bool backend_supported(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// sum_i x[i]^2
double sumsq(const double* x, std::size_t n);

// x[i] *= alpha
void scale(double alpha, double* x, std::size_t n);

// y[i] *= x[i]
void mul(const double* x, double* y, std::size_t n);

// Per-backend entry points, exposed for equivalence testing.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double sumsq(const double* x, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void mul(const double* x, double* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double sumsq(const double* x, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void mul(const double* x, double* y, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
double sumsq(const double* x, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void mul(const double* x, double* y, std::size_t n);
}  // namespace neon
#endif

}  // namespace diar::kernels
