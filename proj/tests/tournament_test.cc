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

#include <algorithm>
#include <numeric>
#include <vector>

#include "distributions/discrete_distribution.h"
#include "distributions/instance.h"
#include "gtest/gtest.h"
#include "oracles/sq_oracle.h"
#include "selectors/tournament.h"
#include "test_util.h"

namespace hsel {
namespace {

using ::hsel::testing::RandomClass;
using ::hsel::testing::RandomDistribution;
using ::hsel::testing::ReferenceOpt;
using ::hsel::testing::ReferenceTv;

DiscreteDistribution D(std::vector<double> w) {
  return *DiscreteDistribution::Create(std::move(w));
}

TEST(ScheffeTestTest, Examples) {
  const auto f = D({0.3, 0.7});
  for (double y : {0.0, 0.4, 1.0}) {
    EXPECT_EQ(ScheffeTest(f, f, y), ScheffeWinner::kFirst);
  }
  EXPECT_EQ(ScheffeTest(D({1, 0}), D({0, 1}), 0.9), ScheffeWinner::kFirst);
  EXPECT_EQ(ScheffeTest(D({1, 0}), D({0, 1}), 0.1), ScheffeWinner::kSecond);
  EXPECT_EQ(ScheffeTest(D({1, 0}), D({0, 1}), 0.5), ScheffeWinner::kFirst);
}

TEST(ScheffeTestTest, ExactAnswerFavorsTarget) {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = 2 + UniformIndex(rng, 10);
    const auto f1 = RandomDistribution(rng, n);
    const auto f2 = RandomDistribution(rng, n);
    const auto h = RandomDistribution(rng, n);
    const double y = *EventProbability(h, *ScheffeSet(f1, f2));
    EXPECT_EQ(ScheffeTest(h, f2, *EventProbability(h, *ScheffeSet(h, f2))),
              ScheffeWinner::kFirst);
    const auto& winner = ScheffeTest(f1, f2, y) == ScheffeWinner::kFirst ? f1 : f2;
    EXPECT_LE(ReferenceTv(h, winner),
              3 * std::min(ReferenceTv(h, f1), ReferenceTv(h, f2)) + 1e-12);
  }
}

TEST(RoundRobinTest, SingleMemberMakesNoQuery) {
  const auto F = *HypothesisClass::Create({D({1, 1})});
  ExactOracle oracle(D({1, 1}));
  const SelectionOutcome out = *RoundRobin(F, oracle, 0.1, 0.1);
  EXPECT_EQ(out.chosen_index, 0u);
  EXPECT_EQ(out.rounds_used, 0);
  EXPECT_EQ(oracle.ledger().queries_answered, 0);
}

TEST(RoundRobinTest, TwoMembersOneQuery) {
  const auto F = *HypothesisClass::Create({D({1, 0}), D({0, 1})});
  ExactOracle oracle(D({0.2, 0.8}));
  const SelectionOutcome out = *RoundRobin(F, oracle, 0.1, 0.1);
  EXPECT_EQ(out.chosen_index, 1u);
  EXPECT_EQ(out.rounds_used, 1);
  EXPECT_EQ(oracle.ledger().queries_answered, 1);
}

TEST(RoundRobinTest, OneSubmissionOfAllPairs) {
  Rng rng(22);
  for (size_t k : {3, 5, 9}) {
    const auto F = RandomClass(rng, k, 6);
    ExactOracle oracle(RandomDistribution(rng, 6));
    const SelectionOutcome out = *RoundRobin(F, oracle, 0.1, 0.1);
    ASSERT_EQ(out.round_log.size(), 1u);
    EXPECT_EQ(out.round_log[0].workload_size, static_cast<int64_t>(k * (k - 1) / 2));
    EXPECT_EQ(out.round_log[0].critical_count, out.round_log[0].workload_size);
    EXPECT_EQ(oracle.ledger().oracle_rounds, 1);
  }
}

TEST(RoundRobinTest, NineFactorWithExactOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t k = 1 + UniformIndex(rng, 6);
    const size_t n = 2 + UniformIndex(rng, 7);
    const auto F = RandomClass(rng, k, n);
    const auto h = RandomDistribution(rng, n);
    ExactOracle oracle(h);
    const size_t got = RoundRobin(F, oracle, 0.1, 0.1)->chosen_index;
    EXPECT_LE(ReferenceTv(h, F[got]), 9 * ReferenceOpt(h, F) + 1e-12);
  }
}

TEST(RoundRobinTest, PicksMostWinsWithLowestIndexOnTie) {
  // Identical members: every test is a tie won by the first, so member 0 has
  // the most wins.
  const auto F = *HypothesisClass::Create({D({1, 1}), D({1, 1}), D({1, 1})});
  ExactOracle oracle(D({1, 3}));
  EXPECT_EQ(RoundRobin(F, oracle, 0.1, 0.1)->chosen_index, 0u);
}

TEST(MdeVariantTest, SingleMemberAndPlanted) {
  const auto one = *HypothesisClass::Create({D({1, 2})});
  ExactOracle o1(D({1, 1}));
  EXPECT_EQ(MdeVariant(one, o1, 0.1, 0.1)->chosen_index, 0u);
  Rng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const auto F = RandomClass(rng, 7, 9);
    const size_t j = UniformIndex(rng, 7);
    ExactOracle oracle(F[j]);
    const SelectionOutcome out = *MdeVariant(F, oracle, 0.1, 0.1);
    EXPECT_EQ(out.chosen_index, j);
    EXPECT_EQ(out.rounds_used, 1);
    EXPECT_EQ(out.round_log[0].workload_size, 21);
  }
}

TEST(MdeVariantTest, ThreeFactorWithExactOracle) {
  Rng rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t k = 1 + UniformIndex(rng, 8);
    const size_t n = 2 + UniformIndex(rng, 9);
    const auto F = RandomClass(rng, k, n);
    const auto h = RandomDistribution(rng, n);
    ExactOracle oracle(h);
    const size_t got = MdeVariant(F, oracle, 0.1, 0.1)->chosen_index;
    EXPECT_LE(ReferenceTv(h, F[got]), 3 * ReferenceOpt(h, F) + 1e-12);
  }
}

TEST(MultiRoundRobinTest, GroupCounts) {
  Rng rng(26);
  const auto F = RandomClass(rng, 10, 5);
  ExactOracle oracle(RandomDistribution(rng, 5));
  std::vector<size_t> nine(9), ten(10);
  std::iota(nine.begin(), nine.end(), size_t{0});
  std::iota(ten.begin(), ten.end(), size_t{0});
  Rng r1(1), r2(2);
  EXPECT_EQ(MultiRoundRobin(F, nine, oracle, 0.1, 0.1, 3, r1)->size(), 3u);
  EXPECT_EQ(MultiRoundRobin(F, ten, oracle, 0.1, 0.1, 3, r2)->size(), 4u);
  EXPECT_FALSE(MultiRoundRobin(F, ten, oracle, 0.1, 0.1, 1, r2).ok());
}

TEST(MultiRoundRobinTest, OneGroupMatchesRoundRobin) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst =
        *GenerateInstance({InstanceFamily::kPlanted, 6, 8, 0.0}, seed);
    ExactOracle oracle(inst.target);
    std::vector<size_t> all(6);
    std::iota(all.begin(), all.end(), size_t{0});
    Rng rng(seed);
    const auto winners =
        *MultiRoundRobin(inst.hypotheses, all, oracle, 0.1, 0.1, 6, rng);
    ASSERT_EQ(winners.size(), 1u);
    EXPECT_EQ(winners[0],
              RoundRobin(inst.hypotheses, oracle, 0.1, 0.1)->chosen_index);
  }
}

TEST(RandomPartitionTest, CoversCandidatesInGroupsOfEta) {
  Rng rng(27);
  std::vector<size_t> c(23);
  std::iota(c.begin(), c.end(), size_t{100});
  const auto groups = RandomPartition(c, 5, rng);
  ASSERT_EQ(groups.size(), 5u);
  std::vector<size_t> seen;
  for (size_t g = 0; g < groups.size(); ++g) {
    EXPECT_EQ(groups[g].size(), g + 1 < groups.size() ? 5u : 3u);
    seen.insert(seen.end(), groups[g].begin(), groups[g].end());
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, c);
}

}  // namespace
}  // namespace hsel
