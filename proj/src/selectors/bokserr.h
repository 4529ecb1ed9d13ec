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

#ifndef HSEL_SELECTORS_BOKSERR_H_
#define HSEL_SELECTORS_BOKSERR_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "base/random.h"
#include "distributions/discrete_distribution.h"
#include "oracles/sq_oracle.h"
#include "selectors/bokserr_params.h"
#include "selectors/selection_outcome.h"

namespace hsel {

// Which stages of the pipeline run before the final MDE-variant.
//   kFull:         knockout, then SRR on its survivors.
//   kKnockoutOnly: knockout; final candidates K1 and K2.
//   kSrrOnly:      SRR on the whole class; final candidates R1 and R2.
enum class Pipeline { kFull, kKnockoutOnly, kSrrOnly };

const char* PipelineName(Pipeline pipeline);

// Stage accuracy split: elimination stages run at (alpha/6, beta/3) and the
// final MDE-variant at (alpha/2, beta/3).
inline constexpr double kStageAlphaShare = 1.0 / 6.0;
inline constexpr double kFinalAlphaShare = 1.0 / 2.0;
inline constexpr double kBetaShare = 1.0 / 3.0;

// BOKSERR: (K1, K2) = knockout(F, t1); (R1, R2) = SRR(K1, eta, t2); then
// MDE-variant over K2, R1, R2 in that order with repeats removed. The
// outcome carries lists "K1", "K2", "R1", "R2" and "final". A class of one
// member is returned without any oracle call.
absl::StatusOr<SelectionOutcome> Bokserr(const HypothesisClass& hypotheses,
                                         StatisticalQueryOracle& oracle,
                                         double alpha, double beta,
                                         const BokserrParams& params, Rng& rng,
                                         Pipeline pipeline = Pipeline::kFull);

}  // namespace hsel

#endif  // HSEL_SELECTORS_BOKSERR_H_
