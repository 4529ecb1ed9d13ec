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

// Worst-case sample budgets, computed by replaying the round structure of a
// selector with the largest candidate counts any run can reach.

#ifndef HSEL_SELECTORS_BUDGET_H_
#define HSEL_SELECTORS_BUDGET_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "oracles/sq_oracle.h"
#include "selectors/bokserr.h"
#include "selectors/bokserr_params.h"
#include "selectors/selection_outcome.h"

namespace hsel {

// Samples one submission of n queries at (alpha, beta, m) consumes.
using SampleCost = std::function<absl::StatusOr<int64_t>(
    double alpha, double beta, int64_t m, int64_t n)>;

// Cost model of a live oracle.
SampleCost OracleCost(const StatisticalQueryOracle& oracle);

// Cost model of the randomized-response oracle at privacy level epsilon.
SampleCost RandomizedResponseCost(double epsilon);

struct BudgetRow {
  std::string stage;
  int64_t stage_round = 0;
  int64_t candidates = 0;  // candidates entering the round
  int64_t workload_size = 0;
  int64_t critical_count = 0;
  double alpha = 0.0;
  double beta = 0.0;
  int64_t samples = 0;
};

struct BudgetTable {
  std::vector<BudgetRow> rows;
  int64_t total_samples = 0;
  int64_t rounds() const { return static_cast<int64_t>(rows.size()); }
};

nlohmann::json BudgetTableToJson(const BudgetTable& table);
std::string FormatBudgetTable(const BudgetTable& table);

// Worst case of Bokserr(k, alpha, beta, params, pipeline): knockout survivors
// shrink as MaxKnockoutSurvivors, SRR survivors as min(n, reps * groups), no
// round exits early, and the final MDE-variant runs over
// min(k, |K2| + |R1| + |R2|) candidates.
absl::StatusOr<BudgetTable> PipelineBudget(int64_t k, double alpha,
                                           double beta,
                                           const BokserrParams& params,
                                           Pipeline pipeline,
                                           const SampleCost& cost);

// Budget of a one-round all-pairs selector (round-robin or MDE-variant).
absl::StatusOr<BudgetTable> AllPairsBudget(int64_t k, double alpha,
                                           double beta, const std::string& stage,
                                           const SampleCost& cost);

// PipelineBudget of the full pipeline under the randomized-response oracle.
absl::StatusOr<BudgetTable> BudgetEstimate(int64_t k, double alpha,
                                           double beta, double epsilon,
                                           const BokserrParams& params);

// Re-derives each logged round's consumption from its parameters.
absl::StatusOr<int64_t> SamplesFromLog(std::span<const RoundRecord> log,
                                       const SampleCost& cost);

}  // namespace hsel

#endif  // HSEL_SELECTORS_BUDGET_H_
