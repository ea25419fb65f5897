/* Copyright 2026 The SceneQA Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SCENEQA_COMMON_H_
#define SCENEQA_COMMON_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sceneqa {

inline constexpr std::string_view kToolVersion = "0.1.0";

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input data (scenes, predictions, grids).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Malformed registry / dataset / config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// 64-bit FNV-1a. Used for stable ids, seeds and split decisions; std::hash is
// not guaranteed stable across implementations.
inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t fnv1a(std::string_view bytes,
                           std::uint64_t state = kFnvOffset) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= kFnvPrime;
  }
  return state;
}

inline std::uint64_t fnv1a_u64(std::uint64_t value,
                               std::uint64_t state = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    state ^= (value >> (8 * i)) & 0xffu;
    state *= kFnvPrime;
  }
  return state;
}

// Finalizer with full avalanche; FNV state alone mixes its high bits poorly
// on short inputs.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

std::string to_hex16(std::uint64_t value);

// Deterministic RNG. mt19937_64 output is fully specified by the standard;
// the bounded draws below avoid std distributions, which are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be > 0.
  std::size_t bounded(std::size_t n) { return next() % n; }

  // Uniform in [0, 1).
  double unit() { return (next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[bounded(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sceneqa

#endif  // SCENEQA_COMMON_H_
