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

// Compiled with -mavx2. Only reached through the dispatcher after a runtime
// CPU check.

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>

#include "kernels/simd_kernels.h"

namespace hsel::kernels::avx2 {
namespace {

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

// Lane k of the result is all-ones iff bit k of `bits` is set (k < 4).
inline __m256d ExpandNibble(uint64_t bits) {
  const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
  const __m256i broadcast = _mm256_set1_epi64x(static_cast<int64_t>(bits));
  return _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(broadcast, lane_bits), lane_bits));
}

}  // namespace

double AbsDiffSum(std::span<const double> a, std::span<const double> b) {
  const size_t n = a.size();
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 =
        _mm256_sub_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
    const __m256d d1 =
        _mm256_sub_pd(_mm256_loadu_pd(&a[i + 4]), _mm256_loadu_pd(&b[i + 4]));
    acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_andnot_pd(sign, d1));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
    acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, d));
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += std::fabs(a[i] - b[i]);
  return sum;
}

double MaskedSum(std::span<const double> w, std::span<const uint64_t> mask) {
  const size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint64_t nibble = (mask[i >> 6] >> (i & 63)) & 0xFU;
    if (nibble == 0) continue;
    acc = _mm256_add_pd(
        acc, _mm256_and_pd(_mm256_loadu_pd(&w[i]), ExpandNibble(nibble)));
  }
  double sum = HorizontalSum(acc);
  for (; i < n; ++i) {
    if ((mask[i >> 6] >> (i & 63)) & 1U) sum += w[i];
  }
  return sum;
}

void GreaterMask(std::span<const double> a, std::span<const double> b,
                 std::span<uint64_t> out) {
  const size_t n = a.size();
  for (uint64_t& word : out) word = 0;
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(&a[i]),
                                     _mm256_loadu_pd(&b[i]), _CMP_GT_OQ);
    const auto bits = static_cast<uint64_t>(_mm256_movemask_pd(gt));
    out[i >> 6] |= bits << (i & 63);
  }
  for (; i < n; ++i) {
    if (a[i] > b[i]) out[i >> 6] |= uint64_t{1} << (i & 63);
  }
}

int64_t RandomizedResponseTally(std::span<const uint8_t> member,
                                std::span<const uint64_t> draws,
                                uint64_t flip_threshold) {
  const size_t n = member.size();
  // Unsigned 64-bit compare via the signed compare on sign-flipped operands.
  const __m256i bias = _mm256_set1_epi64x(INT64_MIN);
  const __m256i threshold = _mm256_xor_si256(
      _mm256_set1_epi64x(static_cast<int64_t>(flip_threshold)), bias);
  const __m256i zero = _mm256_setzero_si256();
  int64_t ones = 0;
  size_t j = 0;
  for (; j + 32 <= n; j += 32) {
    const __m256i bytes =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&member[j]));
    const auto member_bits = static_cast<uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpgt_epi8(bytes, zero)));
    uint32_t flip_bits = 0;
    for (size_t q = 0; q < 8; ++q) {
      const __m256i d = _mm256_xor_si256(
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&draws[j + 4 * q])),
          bias);
      const __m256i lt = _mm256_cmpgt_epi64(threshold, d);
      flip_bits |= static_cast<uint32_t>(
                       _mm256_movemask_pd(_mm256_castsi256_pd(lt)))
                   << (4 * q);
    }
    ones += std::popcount(member_bits ^ flip_bits);
  }
  for (; j < n; ++j) {
    const uint8_t flip = draws[j] < flip_threshold ? 1 : 0;
    ones += member[j] ^ flip;
  }
  return ones;
}

}  // namespace hsel::kernels::avx2
