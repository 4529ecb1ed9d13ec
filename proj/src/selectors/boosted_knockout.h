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

#ifndef HSEL_SELECTORS_BOOSTED_KNOCKOUT_H_
#define HSEL_SELECTORS_BOOSTED_KNOCKOUT_H_

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

// Boosted knockout over `candidates` for t rounds.
//
// Round i draws r_i = KnockoutRepetitions(i) independent random pairings of
// the current survivors and submits all their Scheffé queries as one
// workload with m = r_i. A member survives the round if it wins at least
// 3/4 of its r_i tests. With an odd survivor count the unpaired member of a
// pairing sits out that test and is not credited a win. Rounds stop early
// once at most one survivor is left.
//
// The sub-sample list holds min(|candidates|, KnockoutSubsampleSize)
// candidates drawn uniformly without replacement.
absl::StatusOr<StageLists> BoostedKnockoutOver(
    const HypothesisClass& hypotheses, std::span<const size_t> candidates,
    OracleSession& session, double alpha, double beta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng);

// Runs the stage over the whole class. The outcome carries lists "L1" and
// "L2"; chosen_index is the first member of L1, or of L2 if L1 is empty.
absl::StatusOr<SelectionOutcome> BoostedKnockout(
    const HypothesisClass& hypotheses, StatisticalQueryOracle& oracle,
    double alpha, double beta, int64_t t,
    const ConstantMultipliers& multipliers, Rng& rng);

}  // namespace hsel

#endif  // HSEL_SELECTORS_BOOSTED_KNOCKOUT_H_
