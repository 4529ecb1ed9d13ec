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

#include "selectors/bokserr.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "absl/status/status.h"
#include "base/status_macros.h"
#include "selectors/boosted_knockout.h"
#include "selectors/boosted_srr.h"
#include "selectors/tournament.h"

namespace hsel {
namespace {

void AppendUnique(const std::vector<size_t>& items, std::vector<bool>& seen,
                  std::vector<size_t>& out) {
  for (size_t i : items) {
    if (seen[i]) continue;
    seen[i] = true;
    out.push_back(i);
  }
}

}  // namespace

const char* PipelineName(Pipeline pipeline) {
  switch (pipeline) {
    case Pipeline::kFull:
      return "bokserr";
    case Pipeline::kKnockoutOnly:
      return "knockout_only";
    case Pipeline::kSrrOnly:
      return "srr_only";
  }
  return "unknown";
}

absl::StatusOr<SelectionOutcome> Bokserr(const HypothesisClass& hypotheses,
                                         StatisticalQueryOracle& oracle,
                                         double alpha, double beta,
                                         const BokserrParams& params, Rng& rng,
                                         Pipeline pipeline) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError("alpha and beta must lie in (0, 1)");
  }
  RETURN_IF_ERROR(ValidateBokserrParams(params));
  OracleSession session(oracle);
  SelectionOutcome outcome;
  if (hypotheses.size() == 1) {
    outcome.lists["final"] = {0};
    session.Finish(outcome);
    return outcome;
  }

  const double stage_alpha = alpha * kStageAlphaShare;
  const double stage_beta = beta * kBetaShare;
  std::vector<size_t> all(hypotheses.size());
  std::iota(all.begin(), all.end(), size_t{0});

  std::vector<std::vector<size_t>> pool;
  if (pipeline != Pipeline::kSrrOnly) {
    ASSIGN_OR_RETURN(StageLists knockout,
                     BoostedKnockoutOver(hypotheses, all, session, stage_alpha,
                                         stage_beta, params.t1,
                                         params.multipliers, rng));
    outcome.lists["K1"] = knockout.survivors;
    outcome.lists["K2"] = knockout.subsample;
    if (pipeline == Pipeline::kKnockoutOnly) {
      pool = {knockout.survivors, knockout.subsample};
    } else {
      ASSIGN_OR_RETURN(StageLists srr,
                       BoostedSrrOver(hypotheses, knockout.survivors, session,
                                      stage_alpha, stage_beta, params.eta,
                                      params.t2, params.multipliers, rng));
      outcome.lists["R1"] = srr.survivors;
      outcome.lists["R2"] = srr.subsample;
      pool = {knockout.subsample, srr.survivors, srr.subsample};
    }
  } else {
    ASSIGN_OR_RETURN(StageLists srr,
                     BoostedSrrOver(hypotheses, all, session, stage_alpha,
                                    stage_beta, params.eta, params.t2,
                                    params.multipliers, rng));
    outcome.lists["R1"] = srr.survivors;
    outcome.lists["R2"] = srr.subsample;
    pool = {srr.survivors, srr.subsample};
  }

  std::vector<bool> seen(hypotheses.size(), false);
  std::vector<size_t> finalists;
  for (const auto& list : pool) AppendUnique(list, seen, finalists);
  outcome.lists["final"] = finalists;
  ASSIGN_OR_RETURN(outcome.chosen_index,
                   MdeVariantOver(hypotheses, finalists, session,
                                  alpha * kFinalAlphaShare, stage_beta, "mde"));
  session.Finish(outcome);
  return outcome;
}

}  // namespace hsel
