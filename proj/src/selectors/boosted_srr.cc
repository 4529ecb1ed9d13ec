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

#include "selectors/boosted_srr.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "absl/status/status.h"
#include "base/status_macros.h"
#include "selectors/tournament.h"

namespace hsel {

absl::StatusOr<StageLists> BoostedSrrOver(
    const HypothesisClass& hypotheses, std::span<const size_t> candidates,
    OracleSession& session, double alpha, double beta, int64_t eta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng) {
  if (eta < 2) return absl::InvalidArgumentError("SRR needs eta >= 2");
  if (t < 0) return absl::InvalidArgumentError("SRR needs t >= 0");
  RETURN_IF_ERROR(ValidateMultipliers(multipliers));
  StageLists lists;
  const int64_t k = static_cast<int64_t>(candidates.size());
  const int64_t sub =
      SrrSubsampleSize(k, beta, eta, t, multipliers.srr_subsample);
  lists.subsample = SampleWithoutReplacement(
      std::vector<size_t>(candidates.begin(), candidates.end()),
      static_cast<size_t>(sub), rng);

  const int64_t reps = SrrRepetitions(beta, multipliers.srr_repetitions);
  std::vector<size_t> survivors(candidates.begin(), candidates.end());
  int64_t group_size = eta;
  for (int64_t round = 1; round <= t && survivors.size() > 1; ++round) {
    Workload workload(hypotheses.domain_size(), alpha, beta, 1);
    std::vector<PairTest> tests;
    std::vector<std::vector<size_t>> groups;
    for (int64_t rep = 0; rep < reps; ++rep) {
      auto pass = RandomPartition(survivors, group_size, rng);
      AppendRoundRobinTests(workload, hypotheses, pass, groups.size(), tests);
      for (auto& group : pass) groups.push_back(std::move(group));
    }
    workload.set_critical_count(static_cast<int64_t>(workload.size()));
    ASSIGN_OR_RETURN(const std::vector<double> answers,
                     session.Submit("srr", round, workload));
    std::vector<size_t> next =
        ResolveRoundRobinWinners(groups, 0, tests, answers);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    survivors = std::move(next);
    lists.round_sizes.push_back(static_cast<int64_t>(survivors.size()));
    group_size = SquareGroupSize(group_size);
  }
  lists.survivors = std::move(survivors);
  return lists;
}

absl::StatusOr<SelectionOutcome> BoostedSrr(
    const HypothesisClass& hypotheses, StatisticalQueryOracle& oracle,
    double alpha, double beta, int64_t eta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng) {
  std::vector<size_t> all(hypotheses.size());
  std::iota(all.begin(), all.end(), size_t{0});
  OracleSession session(oracle);
  ASSIGN_OR_RETURN(StageLists lists,
                   BoostedSrrOver(hypotheses, all, session, alpha, beta, eta,
                                  t, multipliers, rng));
  SelectionOutcome outcome;
  outcome.chosen_index = lists.survivors.front();
  outcome.lists["L1"] = std::move(lists.survivors);
  outcome.lists["L2"] = std::move(lists.subsample);
  session.Finish(outcome);
  return outcome;
}

}  // namespace hsel
