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

#include "oracles/randomized_response.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace hsel {
namespace {

absl::Status CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive, got ", epsilon));
  }
  return absl::OkStatus();
}

}  // namespace

RandomizedResponse::RandomizedResponse(double epsilon) : epsilon_(epsilon) {
  // Written in terms of e^-eps so that large eps stays finite.
  const double decay = std::exp(-epsilon);
  keep_ = 1.0 / (1.0 + decay);
  flip_ = decay / (1.0 + decay);
  debias_scale_ = 1.0 / std::tanh(0.5 * epsilon);
  const double scaled = std::ldexp(flip_, 64);
  flip_threshold_ = scaled >= 0x1.0p64
                        ? std::numeric_limits<uint64_t>::max()
                        : static_cast<uint64_t>(scaled);
}

absl::StatusOr<RandomizedResponse> RandomizedResponse::Create(double epsilon) {
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  return RandomizedResponse(epsilon);
}

absl::StatusOr<uint8_t> RrBit(uint8_t x, double epsilon, Rng& rng) {
  if (x > 1) return absl::InvalidArgumentError("input must be a bit");
  absl::StatusOr<RandomizedResponse> rr = RandomizedResponse::Create(epsilon);
  if (!rr.ok()) return rr.status();
  return rr->Apply(x, rng);
}

absl::StatusOr<int64_t> PerQueryBudget(double alpha, double beta, int64_t m,
                                       double epsilon) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must lie in (0, 1), got ", alpha));
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in (0, 1), got ", beta));
  }
  if (m < 1) return absl::InvalidArgumentError("critical count must be >= 1");
  if (absl::Status s = CheckEpsilon(epsilon); !s.ok()) return s;
  const double scale = std::isinf(epsilon) ? 1.0 : 1.0 / std::tanh(0.5 * epsilon);
  const double p = std::ceil(scale * scale *
                             std::log(2.0 * static_cast<double>(m) / beta) /
                             (2.0 * alpha * alpha));
  if (!(p < 0x1.0p62)) {
    return absl::OutOfRangeError("per-query sample budget overflows");
  }
  return static_cast<int64_t>(p);
}

}  // namespace hsel
