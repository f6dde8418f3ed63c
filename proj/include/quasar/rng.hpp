// Copyright 2026 The Quasar Authors
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

#ifndef QUASAR_RNG_HPP
#define QUASAR_RNG_HPP

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace quasar {

// Deterministic generator: xoshiro256** with splitmix64 state seeding.
// Identical seeds yield bit-identical draw sequences on every platform;
// std::mt19937 & friends are avoided because std::shuffle and the
// distribution adaptors are not pinned across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Unbiased uniform draw from [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n);

  // Derives an independent sub-stream from (seed, stream). Used to hand the
  // corpus split, stage-1, and stage-2 trainers their own generators from one
  // top-level config seed.
  Rng split(std::uint64_t stream) const;

  // In-place Fisher-Yates. std::shuffle is implementation-defined, so the
  // swap schedule is pinned here.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
      const std::size_t j = uniform_index(i + 1);
      std::swap(items[i], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace quasar

#endif  // QUASAR_RNG_HPP
