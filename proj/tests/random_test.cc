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

#include "base/random.h"

#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace hsel {
namespace {

TEST(RandomTest, DerivedSeedsDifferPerStream) {
  std::set<uint64_t> seen;
  for (uint64_t parent = 0; parent < 50; ++parent) {
    for (auto s : {SeedStream::kInstance, SeedStream::kDatabase,
                   SeedStream::kOracleNoise, SeedStream::kSelector}) {
      EXPECT_TRUE(seen.insert(DeriveSeed(parent, s)).second);
    }
  }
}

TEST(RandomTest, UniformIndexInRangeAndCoversAll) {
  Rng rng(7);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const uint64_t x = UniformIndex(rng, 7);
    ASSERT_LT(x, 7u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(RandomTest, UniformUnitInHalfOpenInterval) {
  Rng rng(8);
  for (int i = 0; i < 10000; ++i) {
    const double u = UniformUnit(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomTest, SampleWithoutReplacementIsSortedAndDistinct) {
  Rng rng(9);
  std::vector<int> items(40);
  for (int i = 0; i < 40; ++i) items[i] = i * 3;
  for (size_t count : {0, 1, 10, 40, 55}) {
    const auto got = SampleWithoutReplacement(items, count, rng);
    EXPECT_EQ(got.size(), std::min<size_t>(count, 40));
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    EXPECT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
  }
}

TEST(RandomTest, ShuffleIsAPermutationAndDeterministic) {
  std::vector<int> a(100), b;
  for (int i = 0; i < 100; ++i) a[i] = i;
  b = a;
  Rng r1(11), r2(11);
  Shuffle(a, r1);
  Shuffle(b, r2);
  EXPECT_EQ(a, b);
  std::sort(a.begin(), a.end());
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a[i], i);
}

}  // namespace
}  // namespace hsel
