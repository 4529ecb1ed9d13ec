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

#ifndef HSEL_SELECTORS_BOOSTED_SRR_H_
#define HSEL_SELECTORS_BOOSTED_SRR_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "base/random.h"
#include "distributions/discrete_distribution.h"
#include "oracles/sq_oracle.h"
#include "selectors/bokserr_params.h"
#include "selectors/selection_outcome.h"

namespace hsel {

// Boosted sequential round-robin over `candidates` for t rounds, starting at
// group size eta.
//
// Each round runs SrrRepetitions independent multi-round-robin passes over
// the current survivors (random groups of the current size, a round-robin in
// each group) and submits every pair of every pass as one workload whose
// critical count is its size. The next survivors are the union of all group
// winners, ascending; the group size is then squared. Rounds stop early once
// at most one survivor is left.
//
// The sub-sample list holds min(|candidates|, SrrSubsampleSize) candidates
// drawn uniformly without replacement.
absl::StatusOr<StageLists> BoostedSrrOver(
    const HypothesisClass& hypotheses, std::span<const size_t> candidates,
    OracleSession& session, double alpha, double beta, int64_t eta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng);

// Runs the stage over the whole class. The outcome carries lists "L1" and
// "L2"; chosen_index is the first member of L1.
absl::StatusOr<SelectionOutcome> BoostedSrr(
    const HypothesisClass& hypotheses, StatisticalQueryOracle& oracle,
    double alpha, double beta, int64_t eta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng);

}  // namespace hsel

#endif  // HSEL_SELECTORS_BOOSTED_SRR_H_
