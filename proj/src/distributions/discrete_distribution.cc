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

#include "distributions/discrete_distribution.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "base/status_macros.h"
#include "kernels/simd_kernels.h"

namespace hsel {
namespace {

absl::Status CheckSameDomain(size_t a, size_t b) {
  if (a != b) {
    return absl::InvalidArgumentError(
        absl::StrCat("domain size mismatch: ", a, " vs ", b));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::Create(
    std::vector<double> raw_weights) {
  if (raw_weights.empty()) {
    return absl::InvalidArgumentError("distribution needs a non-empty domain");
  }
  double sum = 0.0;
  for (size_t x = 0; x < raw_weights.size(); ++x) {
    const double w = raw_weights[x];
    if (!std::isfinite(w) || w < 0.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("weight ", x, " is negative or not finite: ", w));
    }
    sum += w;
  }
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    return absl::InvalidArgumentError("weights must have a positive sum");
  }
  for (double& w : raw_weights) w /= sum;
  return DiscreteDistribution(std::move(raw_weights));
}

absl::StatusOr<HypothesisClass> HypothesisClass::Create(
    std::vector<DiscreteDistribution> members) {
  if (members.empty()) {
    return absl::InvalidArgumentError("hypothesis class must be non-empty");
  }
  const size_t n = members.front().domain_size();
  for (const DiscreteDistribution& f : members) {
    RETURN_IF_ERROR(CheckSameDomain(n, f.domain_size()));
  }
  return HypothesisClass(std::move(members));
}

absl::StatusOr<double> TvDistance(const DiscreteDistribution& f,
                                  const DiscreteDistribution& g) {
  RETURN_IF_ERROR(CheckSameDomain(f.domain_size(), g.domain_size()));
  return 0.5 * kernels::AbsDiffSum(f.weights(), g.weights());
}

absl::StatusOr<EventSet> ScheffeSet(const DiscreteDistribution& f,
                                    const DiscreteDistribution& g) {
  RETURN_IF_ERROR(CheckSameDomain(f.domain_size(), g.domain_size()));
  EventSet set(f.domain_size());
  kernels::GreaterMask(f.weights(), g.weights(), set.mutable_words());
  return set;
}

absl::StatusOr<double> EventProbability(const DiscreteDistribution& f,
                                        EventSetView a) {
  RETURN_IF_ERROR(CheckSameDomain(f.domain_size(), a.domain_size));
  return kernels::MaskedSum(f.weights(), a.words);
}

absl::StatusOr<ClassDistance> TvToClass(const DiscreteDistribution& h,
                                        const HypothesisClass& hypotheses) {
  RETURN_IF_ERROR(CheckSameDomain(h.domain_size(), hypotheses.domain_size()));
  ClassDistance best{2.0, 0};
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    const double d = 0.5 * kernels::AbsDiffSum(h.weights(),
                                               hypotheses[i].weights());
    if (d < best.distance) best = {d, i};
  }
  return best;
}

}  // namespace hsel
