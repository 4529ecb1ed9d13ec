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

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>

#include "kernels/simd_kernels.h"

namespace hsel::kernels::scalar {

double AbsDiffSum(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return sum;
}

double MaskedSum(std::span<const double> w, std::span<const uint64_t> mask) {
  double sum = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    if ((mask[i >> 6] >> (i & 63)) & 1U) sum += w[i];
  }
  return sum;
}

void GreaterMask(std::span<const double> a, std::span<const double> b,
                 std::span<uint64_t> out) {
  for (uint64_t& word : out) word = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) out[i >> 6] |= uint64_t{1} << (i & 63);
  }
}

int64_t RandomizedResponseTally(std::span<const uint8_t> member,
                                std::span<const uint64_t> draws,
                                uint64_t flip_threshold) {
  int64_t ones = 0;
  for (size_t j = 0; j < member.size(); ++j) {
    const uint8_t flip = draws[j] < flip_threshold ? 1 : 0;
    ones += member[j] ^ flip;
  }
  return ones;
}

}  // namespace hsel::kernels::scalar
