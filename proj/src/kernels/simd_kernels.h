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

// Data-parallel inner loops shared by the distribution, oracle and selector
// code. Every kernel has a portable scalar reference implementation and an
// AVX2 variant; the active variant is chosen once at startup from the CPU
// features and can be overridden for equivalence testing.
//
// Event sets are packed little-endian bitsets: element x lives in bit (x % 64)
// of word (x / 64), and bits past the domain size are zero.

#ifndef HSEL_KERNELS_SIMD_KERNELS_H_
#define HSEL_KERNELS_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>

namespace hsel::kernels {

enum class Isa { kScalar, kAvx2 };

const char* IsaName(Isa isa);

// True when the running CPU supports AVX2 and the binary was built for x86.
bool Avx2Available();

// The instruction set used by the dispatching entry points below.
Isa ActiveIsa();

// Selects the kernel variant. Requesting kAvx2 on a machine without it falls
// back to kScalar. Returns the variant actually selected. Not meant to be
// toggled while other threads are inside a kernel.
Isa SetActiveIsa(Isa isa);

constexpr size_t WordsForBits(size_t n) { return (n + 63) / 64; }

// Sum over i of |a[i] - b[i]|. Spans must have equal length.
double AbsDiffSum(std::span<const double> a, std::span<const double> b);

// Sum of w[i] over the set bits i of `mask`. mask.size() must equal
// WordsForBits(w.size()).
double MaskedSum(std::span<const double> w, std::span<const uint64_t> mask);

// Writes the bitset {i : a[i] > b[i]} into `out` (fully overwritten).
void GreaterMask(std::span<const double> a, std::span<const double> b,
                 std::span<uint64_t> out);

// Number of ones released by randomized response over a block: for each j the
// released bit is member[j] XOR (draws[j] < flip_threshold). `member` holds
// 0/1 bytes.
int64_t RandomizedResponseTally(std::span<const uint8_t> member,
                                std::span<const uint64_t> draws,
                                uint64_t flip_threshold);

namespace scalar {
double AbsDiffSum(std::span<const double> a, std::span<const double> b);
double MaskedSum(std::span<const double> w, std::span<const uint64_t> mask);
void GreaterMask(std::span<const double> a, std::span<const double> b,
                 std::span<uint64_t> out);
int64_t RandomizedResponseTally(std::span<const uint8_t> member,
                                std::span<const uint64_t> draws,
                                uint64_t flip_threshold);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HSEL_HAVE_AVX2_KERNELS 1
namespace avx2 {
double AbsDiffSum(std::span<const double> a, std::span<const double> b);
double MaskedSum(std::span<const double> w, std::span<const uint64_t> mask);
void GreaterMask(std::span<const double> a, std::span<const double> b,
                 std::span<uint64_t> out);
int64_t RandomizedResponseTally(std::span<const uint8_t> member,
                                std::span<const uint64_t> draws,
                                uint64_t flip_threshold);
}  // namespace avx2
#else
#define HSEL_HAVE_AVX2_KERNELS 0
#endif

}  // namespace hsel::kernels

#endif  // HSEL_KERNELS_SIMD_KERNELS_H_
