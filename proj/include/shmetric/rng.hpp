// Copyright 2026 The shmetric Authors.
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

// Seeded randomness. Every random stream derives from one root seed through
// SplitMix64 so that per-trial and per-draw streams are independent of
// scheduling order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace shm {

using Rng = std::mt19937_64;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of child stream `stream` under `root`.
inline std::uint64_t DeriveSeed(std::uint64_t root, std::uint64_t stream) {
  return SplitMix64(SplitMix64(root) ^ SplitMix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng MakeRng(std::uint64_t seed) { return Rng(SplitMix64(seed)); }

// Uniform integer in [0, k).
inline std::size_t UniformIndex(Rng& rng, std::size_t k) {
  return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
}

inline double UniformReal(Rng& rng) {
  // 53 high bits -> [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool FairCoin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace shm
