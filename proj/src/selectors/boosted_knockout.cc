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

#include "selectors/boosted_knockout.h"

#include <numeric>
#include <vector>

#include "absl/status/status.h"
#include "base/status_macros.h"
#include "selectors/tournament.h"

namespace hsel {

absl::StatusOr<StageLists> BoostedKnockoutOver(
    const HypothesisClass& hypotheses, std::span<const size_t> candidates,
    OracleSession& session, double alpha, double beta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng) {
  if (t < 1) return absl::InvalidArgumentError("knockout needs t >= 1");
  RETURN_IF_ERROR(ValidateMultipliers(multipliers));
  StageLists lists;
  const int64_t k = static_cast<int64_t>(candidates.size());
  const int64_t sub = KnockoutSubsampleSize(k, beta, t,
                                            multipliers.knockout_subsample);
  lists.subsample = SampleWithoutReplacement(
      std::vector<size_t>(candidates.begin(), candidates.end()),
      static_cast<size_t>(sub), rng);

  std::vector<size_t> survivors(candidates.begin(), candidates.end());
  for (int64_t round = 1; round <= t && survivors.size() > 1; ++round) {
    const int64_t r = KnockoutRepetitions(round, beta,
                                          multipliers.knockout_repetitions);
    const size_t n = survivors.size();
    Workload workload(hypotheses.domain_size(), alpha, beta, r);
    std::vector<PairTest> tests;
    tests.reserve(static_cast<size_t>(r) * (n / 2));
    std::vector<size_t> order(n);
    for (int64_t rep = 0; rep < r; ++rep) {
      std::iota(order.begin(), order.end(), size_t{0});
      Shuffle(order, rng);
      for (size_t p = 0; p + 1 < n; p += 2) {
        PairTest test = AppendPairTest(workload, hypotheses,
                                       survivors[order[p]],
                                       survivors[order[p + 1]]);
        test.first_slot = order[p];
        test.second_slot = order[p + 1];
        tests.push_back(test);
      }
    }
    ASSIGN_OR_RETURN(const std::vector<double> answers,
                     session.Submit("knockout", round, workload));
    std::vector<int64_t> wins(n, 0);
    for (size_t i = 0; i < tests.size(); ++i) {
      const PairTest& test = tests[i];
      const bool first = ScheffeDecision(test.first_mass, test.second_mass,
                                         answers[i]) == ScheffeWinner::kFirst;
      ++wins[first ? test.first_slot : test.second_slot];
    }
    std::vector<size_t> next;
    for (size_t s = 0; s < n; ++s) {
      if (4 * wins[s] >= 3 * r) next.push_back(survivors[s]);
    }
    survivors = std::move(next);
    lists.round_sizes.push_back(static_cast<int64_t>(survivors.size()));
  }
  lists.survivors = std::move(survivors);
  return lists;
}

absl::StatusOr<SelectionOutcome> BoostedKnockout(
    const HypothesisClass& hypotheses, StatisticalQueryOracle& oracle,
    double alpha, double beta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng) {
  std::vector<size_t> all(hypotheses.size());
  std::iota(all.begin(), all.end(), size_t{0});
  OracleSession session(oracle);
  ASSIGN_OR_RETURN(StageLists lists,
                   BoostedKnockoutOver(hypotheses, all, session, alpha, beta,
                                       t, multipliers, rng));
  SelectionOutcome outcome;
  outcome.chosen_index = !lists.survivors.empty() ? lists.survivors.front()
                                                  : lists.subsample.front();
  outcome.lists["L1"] = std::move(lists.survivors);
  outcome.lists["L2"] = std::move(lists.subsample);
  session.Finish(outcome);
  return outcome;
}

}  // namespace hsel
