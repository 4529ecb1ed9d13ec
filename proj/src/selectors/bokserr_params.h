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

// Parameter ladder of the BOKSERR pipeline and the per-round sizes of its two
// elimination stages. All logarithms are base 2.

#ifndef HSEL_SELECTORS_BOKSERR_PARAMS_H_
#define HSEL_SELECTORS_BOKSERR_PARAMS_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace hsel {

// kTheory uses the literal constants; kPractical scales repetition counts and
// sub-sample sizes by the multipliers below.
enum class ParameterMode { kTheory, kPractical };

const char* ParameterModeName(ParameterMode mode);
absl::StatusOr<ParameterMode> ParseParameterMode(const std::string& name);

struct ConstantMultipliers {
  double knockout_repetitions = 1.0;  // c_r
  double srr_repetitions = 1.0;       // c_rep
  double knockout_subsample = 1.0;    // c_n1
  double srr_subsample = 1.0;         // c_n2

  bool operator==(const ConstantMultipliers&) const = default;
};

absl::Status ValidateMultipliers(const ConstantMultipliers& multipliers);

struct BokserrParams {
  int64_t t1 = 1;            // knockout rounds (after clamping)
  int64_t t1_unclamped = 1;  // (5 + 4 LL(3/beta)) LL(k)
  int64_t t2 = 0;            // SRR rounds
  double k_prime = 1.0;      // k / 2^(t1 log(3/2))
  int64_t eta = 2;           // initial SRR group size
  ParameterMode mode = ParameterMode::kTheory;
  ConstantMultipliers multipliers;
};

absl::Status ValidateBokserrParams(const BokserrParams& params);
nlohmann::json BokserrParamsToJson(const BokserrParams& params);

// max(1, ceil(log log x)).
int64_t LogLogCeil(double x);

// ceil(x) that ignores floating-point noise just above an integer.
int64_t CeilTolerant(double x);

// Derives t1, t2, k' and eta for a class of k >= 2 members:
//   t1 = (5 + 4 LL(3/beta)) LL(k), clamped to ceil(log_{3/2} k),
//   t2 = max(0, LL(k) - 1),
//   k' = k / (3/2)^t1,  eta = max(2, round(k'^(1 / 2^(t2 + 1)))).
// Theory mode ignores `multipliers` and uses 1.0 throughout.
absl::StatusOr<BokserrParams> MakeBokserrParams(
    int64_t k, double beta, ParameterMode mode,
    const ConstantMultipliers& multipliers = {});

// Pairings per knockout round i (1-based): ceil(c_r 32 (4/3)^i log(1/beta)).
int64_t KnockoutRepetitions(int64_t round, double beta, double multiplier);

// min(k, ceil(c_n1 8 log(1/beta) 2^(t log(3/2)))).
int64_t KnockoutSubsampleSize(int64_t k, double beta, int64_t t,
                              double multiplier);

// Most members that can clear the 3/4 win threshold out of n: every
// repetition hands out floor(n/2) wins, so at most (4/3) floor(n/2) survive.
int64_t MaxKnockoutSurvivors(int64_t n);

// Multi-round-robin passes per SRR round: max(1, ceil(c_rep log(1/beta))).
int64_t SrrRepetitions(double beta, double multiplier);

// min(k, ceil(c_n2 2 eta^(2^t) log(1/beta))).
int64_t SrrSubsampleSize(int64_t k, double beta, int64_t eta, int64_t t,
                         double multiplier);

// eta^2, saturating well below int64 overflow.
int64_t SquareGroupSize(int64_t eta);

// k / (3/2)^i: survivors allowed after knockout round i.
double KnockoutSizeBound(int64_t k, int64_t round);

// max(1, k log(1/beta)^i / eta^(2^i - 1)): survivors allowed after SRR
// round i.
double SrrSizeBound(int64_t k, double beta, int64_t eta, int64_t round);

}  // namespace hsel

#endif  // HSEL_SELECTORS_BOKSERR_PARAMS_H_
