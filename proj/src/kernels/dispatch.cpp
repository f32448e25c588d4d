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

#include "diar/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace diar::kernels {

namespace {

struct Vtable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  void (*mul)(const double*, double*, std::size_t);
};

constexpr Vtable kScalarVtable = {scalar::dot, scalar::axpy, scalar::sumsq,
                                  scalar::scale, scalar::mul};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2Vtable = {avx2::dot, avx2::axpy, avx2::sumsq,
                                avx2::scale, avx2::mul};
#endif
#if defined(__aarch64__)
constexpr Vtable kNeonVtable = {neon::dot, neon::axpy, neon::sumsq,
                                neon::scale, neon::mul};
#endif

std::atomic<const Vtable*> g_vtable{nullptr};
std::atomic<Backend> g_backend{Backend::kScalar};
std::once_flag g_init_once;

const Vtable* vtable_for(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return &kScalarVtable;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &kAvx2Vtable;
#else
      return nullptr;
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
      return &kNeonVtable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Backend::kAvx2;
  }
  return Backend::kScalar;
#elif defined(__aarch64__)
  return Backend::kNeon;
#else
  return Backend::kScalar;
#endif
}

void init() {
  Backend b = detect_best();
  if (const char* env = std::getenv("DIAR_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) {
      b = Backend::kScalar;
    } else if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::kAvx2)) {
      b = Backend::kAvx2;
    } else if (std::strcmp(env, "neon") == 0 && backend_supported(Backend::kNeon)) {
      b = Backend::kNeon;
    }
  }
  g_backend.store(b, std::memory_order_relaxed);
  g_vtable.store(vtable_for(b), std::memory_order_release);
}

inline const Vtable& vt() {
  const Vtable* p = g_vtable.load(std::memory_order_acquire);
  if (p == nullptr) {
    std::call_once(g_init_once, init);
    p = g_vtable.load(std::memory_order_acquire);
  }
  return *p;
}

}  // namespace

bool backend_supported(Backend b) {
  if (b == Backend::kScalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::kAvx2) {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }
#endif
#if defined(__aarch64__)
  if (b == Backend::kNeon) return true;
#endif
  return false;
}

Backend active_backend() {
  vt();
  return g_backend.load(std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool set_backend(Backend b) {
  if (!backend_supported(b)) return false;
  std::call_once(g_init_once, init);
  g_backend.store(b, std::memory_order_relaxed);
  g_vtable.store(vtable_for(b), std::memory_order_release);
  return true;
}

double dot(const double* a, const double* b, std::size_t n) {
  return vt().dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  vt().axpy(alpha, x, y, n);
}

double sumsq(const double* x, std::size_t n) { return vt().sumsq(x, n); }

void scale(double alpha, double* x, std::size_t n) { vt().scale(alpha, x, n); }

void mul(const double* x, double* y, std::size_t n) { vt().mul(x, y, n); }

}  // namespace diar::kernels
