// Copyright 2026 The candidatesort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSORT_RNG_HPP_
#define CSORT_RNG_HPP_

#include <cstdint>

namespace csort {

// All randomness in the library flows through SplitMix64 (Steele, Lea &
// Flood's publicly specified generator). It is tiny, portable, and makes
// derived streams cheap: generators hash (seed, i, j) into an independent
// per-pair stream, so every pair's draws are reproducible regardless of
// iteration order, platform, or standard library.

// Stateless SplitMix64 finalizer (avalanching 64->64 mix).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Single fair coin flip.
  bool next_bool() { return (next() >> 63) != 0; }

  // Uniform draw from [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Deterministic stream key for the sub-stream (a, b) of a seed. Used for
// per-pair draws and per-trial seeds.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b) {
  constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  return mix64(mix64(seed + kGolden) ^ mix64(a * kGolden + 1) ^
               mix64(b * kGolden + 2));
}

}  // namespace csort

#endif  // CSORT_RNG_HPP_
