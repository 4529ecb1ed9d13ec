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

#include "selectors/tournament.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "base/status_macros.h"
#include "kernels/simd_kernels.h"

namespace hsel {
namespace {

int64_t PairCount(size_t n) {
  return static_cast<int64_t>(n) * (static_cast<int64_t>(n) - 1) / 2;
}

std::vector<size_t> AllIndices(size_t k) {
  std::vector<size_t> indices(k);
  std::iota(indices.begin(), indices.end(), size_t{0});
  return indices;
}

}  // namespace

ScheffeWinner ScheffeTest(const DiscreteDistribution& f1,
                          const DiscreteDistribution& f2, double y) {
  assert(f1.domain_size() == f2.domain_size());
  std::vector<uint64_t> mask(kernels::WordsForBits(f1.domain_size()));
  kernels::GreaterMask(f1.weights(), f2.weights(), mask);
  return ScheffeDecision(kernels::MaskedSum(f1.weights(), mask),
                         kernels::MaskedSum(f2.weights(), mask), y);
}

PairTest AppendPairTest(Workload& workload, const HypothesisClass& hypotheses,
                        size_t first, size_t second) {
  const DiscreteDistribution& f = hypotheses[first];
  const DiscreteDistribution& g = hypotheses[second];
  workload.AddScheffeSet(f, g);
  const EventSetView b = workload.query(workload.size() - 1);
  return {first, second, kernels::MaskedSum(f.weights(), b.words),
          kernels::MaskedSum(g.weights(), b.words)};
}

void AppendRoundRobinTests(Workload& workload,
                           const HypothesisClass& hypotheses,
                           const std::vector<std::vector<size_t>>& groups,
                           size_t group_offset, std::vector<PairTest>& tests) {
  for (size_t g = 0; g < groups.size(); ++g) {
    const std::vector<size_t>& members = groups[g];
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        PairTest t = AppendPairTest(workload, hypotheses, members[a],
                                    members[b]);
        t.group = group_offset + g;
        t.first_slot = a;
        t.second_slot = b;
        tests.push_back(t);
      }
    }
  }
}

std::vector<size_t> ResolveRoundRobinWinners(
    const std::vector<std::vector<size_t>>& groups, size_t group_offset,
    std::span<const PairTest> tests, std::span<const double> answers) {
  std::vector<std::vector<int64_t>> wins(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) wins[g].assign(groups[g].size(), 0);
  for (size_t i = 0; i < tests.size(); ++i) {
    const PairTest& t = tests[i];
    if (t.group < group_offset || t.group >= group_offset + groups.size()) {
      continue;
    }
    const size_t g = t.group - group_offset;
    const bool first =
        ScheffeDecision(t.first_mass, t.second_mass, answers[i]) ==
        ScheffeWinner::kFirst;
    ++wins[g][first ? t.first_slot : t.second_slot];
  }
  std::vector<size_t> winners;
  winners.reserve(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    const auto best = std::max_element(wins[g].begin(), wins[g].end());
    winners.push_back(groups[g][static_cast<size_t>(best - wins[g].begin())]);
  }
  return winners;
}

std::vector<std::vector<size_t>> RandomPartition(std::vector<size_t> candidates,
                                                 int64_t eta, Rng& rng) {
  Shuffle(candidates, rng);
  const auto size = static_cast<size_t>(std::max<int64_t>(eta, 1));
  std::vector<std::vector<size_t>> groups;
  for (size_t begin = 0; begin < candidates.size(); begin += size) {
    const size_t end = std::min(candidates.size(), begin + size);
    groups.emplace_back(candidates.begin() + begin, candidates.begin() + end);
  }
  return groups;
}

absl::StatusOr<size_t> RoundRobinOver(const HypothesisClass& hypotheses,
                                      std::span<const size_t> candidates,
                                      OracleSession& session, double alpha,
                                      double beta, std::string_view stage) {
  if (candidates.empty()) {
    return absl::InvalidArgumentError("round-robin needs a candidate");
  }
  if (candidates.size() == 1) return candidates.front();
  const std::vector<std::vector<size_t>> groups = {
      std::vector<size_t>(candidates.begin(), candidates.end())};
  Workload workload(hypotheses.domain_size(), alpha, beta,
                    PairCount(candidates.size()));
  std::vector<PairTest> tests;
  AppendRoundRobinTests(workload, hypotheses, groups, 0, tests);
  ASSIGN_OR_RETURN(const std::vector<double> answers,
                   session.Submit(stage, 1, workload));
  return ResolveRoundRobinWinners(groups, 0, tests, answers).front();
}

absl::StatusOr<size_t> MdeVariantOver(const HypothesisClass& hypotheses,
                                      std::span<const size_t> candidates,
                                      OracleSession& session, double alpha,
                                      double beta, std::string_view stage) {
  if (candidates.empty()) {
    return absl::InvalidArgumentError("MDE-variant needs a candidate");
  }
  const size_t n = candidates.size();
  if (n == 1) return candidates.front();
  Workload workload(hypotheses.domain_size(), alpha, beta, PairCount(n));
  std::vector<PairTest> tests;
  tests.reserve(static_cast<size_t>(PairCount(n)));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      PairTest t = AppendPairTest(workload, hypotheses, candidates[a],
                                  candidates[b]);
      t.first_slot = a;
      t.second_slot = b;
      tests.push_back(t);
    }
  }
  ASSIGN_OR_RETURN(const std::vector<double> answers,
                   session.Submit(stage, 1, workload));
  std::vector<double> score(n, 0.0);
  for (size_t i = 0; i < tests.size(); ++i) {
    const PairTest& t = tests[i];
    score[t.first_slot] =
        std::max(score[t.first_slot], std::abs(t.first_mass - answers[i]));
    score[t.second_slot] =
        std::max(score[t.second_slot], std::abs(t.second_mass - answers[i]));
  }
  const auto best = std::min_element(score.begin(), score.end());
  return candidates[static_cast<size_t>(best - score.begin())];
}

absl::StatusOr<SelectionOutcome> RoundRobin(const HypothesisClass& hypotheses,
                                            StatisticalQueryOracle& oracle,
                                            double alpha, double beta) {
  OracleSession session(oracle);
  const std::vector<size_t> all = AllIndices(hypotheses.size());
  SelectionOutcome outcome;
  ASSIGN_OR_RETURN(outcome.chosen_index,
                   RoundRobinOver(hypotheses, all, session, alpha, beta,
                                  "round_robin"));
  session.Finish(outcome);
  return outcome;
}

absl::StatusOr<SelectionOutcome> MdeVariant(const HypothesisClass& hypotheses,
                                            StatisticalQueryOracle& oracle,
                                            double alpha, double beta) {
  OracleSession session(oracle);
  const std::vector<size_t> all = AllIndices(hypotheses.size());
  SelectionOutcome outcome;
  ASSIGN_OR_RETURN(outcome.chosen_index,
                   MdeVariantOver(hypotheses, all, session, alpha, beta, "mde"));
  session.Finish(outcome);
  return outcome;
}

absl::StatusOr<std::vector<size_t>> MultiRoundRobin(
    const HypothesisClass& hypotheses, std::span<const size_t> candidates,
    StatisticalQueryOracle& oracle, double alpha, double beta, int64_t eta,
    Rng& rng) {
  if (eta < 2) return absl::InvalidArgumentError("eta must be >= 2");
  const auto groups = RandomPartition(
      std::vector<size_t>(candidates.begin(), candidates.end()), eta, rng);
  Workload workload(hypotheses.domain_size(), alpha, beta, 1);
  std::vector<PairTest> tests;
  AppendRoundRobinTests(workload, hypotheses, groups, 0, tests);
  if (workload.empty()) return ResolveRoundRobinWinners(groups, 0, {}, {});
  workload.set_critical_count(static_cast<int64_t>(workload.size()));
  OracleSession session(oracle);
  ASSIGN_OR_RETURN(const std::vector<double> answers,
                   session.Submit("multi_round_robin", 1, workload));
  return ResolveRoundRobinWinners(groups, 0, tests, answers);
}

}  // namespace hsel
