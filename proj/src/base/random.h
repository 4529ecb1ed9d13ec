//
// Copyright 2026 The hsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef HSEL_BASE_RANDOM_H_
#define HSEL_BASE_RANDOM_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace hsel {

// All randomness in the library flows through this engine so that results are
// reproducible on a given platform from a single 64-bit seed.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent child seed for a named stream of a parent seed. Trials use
// DeriveSeed(base_seed + trial, stream) for every random component.
constexpr uint64_t DeriveSeed(uint64_t parent, uint64_t stream) {
  return MixSeed(MixSeed(parent) ^ MixSeed(stream + 0x632be59bd9b4e019ULL));
}

// Stream identifiers used by the harness.
enum class SeedStream : uint64_t {
  kInstance = 1,
  kDatabase = 2,
  kOracleNoise = 3,
  kSelector = 4,
};

constexpr uint64_t DeriveSeed(uint64_t parent, SeedStream stream) {
  return DeriveSeed(parent, static_cast<uint64_t>(stream));
}

// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) via Lemire's multiply-shift; n must be > 0.
inline uint64_t UniformIndex(Rng& rng, uint64_t n) {
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

// Fisher-Yates shuffle driven by UniformIndex, so the permutation for a given
// engine state does not depend on the standard library implementation.
template <typename T>
void Shuffle(std::vector<T>& items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[UniformIndex(rng, i)]);
  }
}

// `count` distinct elements of `items` chosen uniformly, returned in sorted
// order. count is clamped to items.size().
template <typename T>
std::vector<T> SampleWithoutReplacement(std::vector<T> items, size_t count,
                                        Rng& rng) {
  count = std::min(count, items.size());
  for (size_t i = 0; i < count; ++i) {
    std::swap(items[i], items[i + UniformIndex(rng, items.size() - i)]);
  }
  items.resize(count);
  std::sort(items.begin(), items.end());
  return items;
}

}  // namespace hsel

#endif  // HSEL_BASE_RANDOM_H_
