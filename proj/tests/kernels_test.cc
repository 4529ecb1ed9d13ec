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

#include <cstdint>
#include <vector>

#include "base/random.h"
#include "gtest/gtest.h"
#include "kernels/simd_kernels.h"

namespace hsel::kernels {
namespace {

constexpr size_t kSizes[] = {0, 1, 3, 4, 7, 8, 31, 32, 33, 63, 64, 65, 100,
                             257, 1000};

std::vector<double> RandomDoubles(Rng& rng, size_t n, bool with_ties) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = with_ties ? static_cast<double>(UniformIndex(rng, 4)) / 4.0
                  : UniformUnit(rng);
  }
  return v;
}

std::vector<uint64_t> RandomMask(Rng& rng, size_t bits) {
  std::vector<uint64_t> mask(WordsForBits(bits));
  for (uint64_t& w : mask) w = rng();
  if (bits % 64 != 0 && !mask.empty()) mask.back() &= (uint64_t{1} << (bits % 64)) - 1;
  return mask;
}

class KernelEquivalenceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!Avx2Available()) GTEST_SKIP() << "AVX2 not available";
  }
};

TEST_F(KernelEquivalenceTest, AbsDiffSumMatchesScalar) {
  Rng rng(1);
  for (size_t n : kSizes) {
    const auto a = RandomDoubles(rng, n, false);
    const auto b = RandomDoubles(rng, n, false);
    const double s = scalar::AbsDiffSum(a, b);
    EXPECT_NEAR(avx2::AbsDiffSum(a, b), s, 1e-12 * (1.0 + s)) << n;
  }
}

TEST_F(KernelEquivalenceTest, MaskedSumMatchesScalar) {
  Rng rng(2);
  for (size_t n : kSizes) {
    const auto w = RandomDoubles(rng, n, false);
    const auto mask = RandomMask(rng, n);
    const double s = scalar::MaskedSum(w, mask);
    EXPECT_NEAR(avx2::MaskedSum(w, mask), s, 1e-12 * (1.0 + s)) << n;
  }
}

TEST_F(KernelEquivalenceTest, GreaterMaskMatchesScalarExactly) {
  Rng rng(3);
  for (size_t n : kSizes) {
    const auto a = RandomDoubles(rng, n, true);
    const auto b = RandomDoubles(rng, n, true);
    std::vector<uint64_t> x(WordsForBits(n), ~uint64_t{0});
    std::vector<uint64_t> y(WordsForBits(n), ~uint64_t{0});
    scalar::GreaterMask(a, b, x);
    avx2::GreaterMask(a, b, y);
    EXPECT_EQ(x, y) << n;
  }
}

TEST_F(KernelEquivalenceTest, RandomizedResponseTallyMatchesScalarExactly) {
  Rng rng(4);
  for (size_t n : kSizes) {
    std::vector<uint8_t> member(n);
    std::vector<uint64_t> draws(n);
    for (size_t i = 0; i < n; ++i) {
      member[i] = static_cast<uint8_t>(rng() & 1);
      draws[i] = rng();
    }
    for (uint64_t threshold : {uint64_t{0}, uint64_t{1} << 62,
                               uint64_t{0x8000000000000000},
                               uint64_t{0xC000000000000000}, ~uint64_t{0}}) {
      EXPECT_EQ(avx2::RandomizedResponseTally(member, draws, threshold),
                scalar::RandomizedResponseTally(member, draws, threshold))
          << n << " " << threshold;
    }
  }
}

TEST(KernelDispatchTest, SwitchesBetweenVariants) {
  const Isa original = ActiveIsa();
  EXPECT_EQ(SetActiveIsa(Isa::kScalar), Isa::kScalar);
  EXPECT_EQ(ActiveIsa(), Isa::kScalar);
  const std::vector<double> a = {0.5, 0.5}, b = {0.75, 0.25};
  EXPECT_DOUBLE_EQ(AbsDiffSum(a, b), 0.5);
  const Isa got = SetActiveIsa(Isa::kAvx2);
  EXPECT_EQ(got, Avx2Available() ? Isa::kAvx2 : Isa::kScalar);
  EXPECT_DOUBLE_EQ(AbsDiffSum(a, b), 0.5);
  SetActiveIsa(original);
}

TEST(KernelScalarTest, ReferenceValues) {
  const std::vector<double> w = {0.1, 0.2, 0.3, 0.4};
  const std::vector<uint64_t> mask = {0b1010};
  EXPECT_DOUBLE_EQ(scalar::MaskedSum(w, mask), 0.6);
  std::vector<uint64_t> out(1);
  scalar::GreaterMask(std::vector<double>{0.5, 0.3, 0.2},
                      std::vector<double>{0.2, 0.3, 0.5}, out);
  EXPECT_EQ(out[0], 0b1u);
  const std::vector<uint8_t> member = {1, 0, 1, 0};
  const std::vector<uint64_t> draws = {0, 0, ~uint64_t{0}, ~uint64_t{0}};
  // Threshold 1: only draws equal to 0 flip.
  EXPECT_EQ(scalar::RandomizedResponseTally(member, draws, 1), 2);
}

}  // namespace
}  // namespace hsel::kernels
