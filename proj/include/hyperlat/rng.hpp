//  Copyright 2026 The hyperlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef HYPERLAT_RNG_HPP_
#define HYPERLAT_RNG_HPP_

#include <cstdint>
#include <random>

namespace hyperlat {

// Deterministic RNG for randomized law suites. Draws are derived from raw
// mt19937_64 output (which the standard pins down bit-for-bit) rather than
// std::uniform_*_distribution, whose results vary between standard library
// implementations. Reports built from these draws are therefore reproducible
// across toolchains, not just across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(bits() % span);
  }

  bool coin(double p = 0.5) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hyperlat

#endif  // HYPERLAT_RNG_HPP_
