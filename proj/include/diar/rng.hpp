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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace diar {

// Deterministic RNG with explicitly pinned transforms. The standard library
// distributions are implementation-defined, so every draw here is derived
// from raw mt19937_64 output only; a given seed produces the same stream on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Exponential with mean `beta`. Inverse-CDF transform; always >= 0.
  double exponential(double beta) {
    return -beta * std::log1p(-uniform01());
  }

  // Uniform integer in [0, n). Lemire multiply-shift rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) return 0;
    while (true) {
      std::uint64_t x = gen_();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= static_cast<std::uint64_t>(-n) % n) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// SplitMix64 finalizer; used to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent per-item seed from a global seed and an item index.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t index) {
  return splitmix64(global_seed ^ splitmix64(index + 1));
}

}  // namespace diar
