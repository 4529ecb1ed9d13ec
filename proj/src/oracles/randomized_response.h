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

#ifndef HSEL_ORACLES_RANDOMIZED_RESPONSE_H_
#define HSEL_ORACLES_RANDOMIZED_RESPONSE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "base/random.h"

namespace hsel {

// Binary randomized response: reports the input bit with probability
// e^eps / (e^eps + 1) and its complement otherwise, which makes it an
// eps-local randomizer.
class RandomizedResponse {
 public:
  static absl::StatusOr<RandomizedResponse> Create(double epsilon);

  double epsilon() const { return epsilon_; }
  double keep_probability() const { return keep_; }
  double flip_probability() const { return flip_; }

  // The bit is flipped iff a uniform 64-bit draw is below this threshold,
  // i.e. with probability flip_probability() up to 2^-64.
  uint64_t flip_threshold() const { return flip_threshold_; }

  // (e^eps + 1) / (e^eps - 1); maps the mean released bit back to an unbiased
  // estimate of the mean input bit.
  double debias_scale() const { return debias_scale_; }

  // P(output = out | input = in) from the defined Bernoulli parameters.
  double OutputProbability(uint8_t out, uint8_t in) const {
    return out == in ? keep_ : flip_;
  }

  uint8_t Apply(uint8_t bit, Rng& rng) const {
    return static_cast<uint8_t>(bit ^ (rng() < flip_threshold_ ? 1 : 0));
  }

 private:
  explicit RandomizedResponse(double epsilon);

  double epsilon_;
  double keep_;
  double flip_;
  double debias_scale_;
  uint64_t flip_threshold_;
};

// One randomized-response release of bit x (0 or 1).
absl::StatusOr<uint8_t> RrBit(uint8_t x, double epsilon, Rng& rng);

// Samples per query that make the de-biased randomized-response estimate
// alpha-accurate on any fixed set of m queries with probability >= 1 - beta:
//   p = ceil(c^2 ln(2m / beta) / (2 alpha^2)),  c = (e^eps + 1) / (e^eps - 1).
// epsilon = +infinity gives c = 1, the non-private Hoeffding block size.
absl::StatusOr<int64_t> PerQueryBudget(double alpha, double beta, int64_t m,
                                       double epsilon);

}  // namespace hsel

#endif  // HSEL_ORACLES_RANDOMIZED_RESPONSE_H_
