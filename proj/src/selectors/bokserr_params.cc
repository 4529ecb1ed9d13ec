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

#include "selectors/bokserr_params.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "base/status_macros.h"

namespace hsel {
namespace {

constexpr int64_t kMaxGroupSize = int64_t{1} << 31;

double LogInverse(double beta) { return std::log2(1.0 / beta); }

int64_t ClampToCount(double x, int64_t k) {
  if (!(x < static_cast<double>(k))) return k;
  return std::min<int64_t>(k, CeilTolerant(x));
}

}  // namespace

const char* ParameterModeName(ParameterMode mode) {
  return mode == ParameterMode::kTheory ? "theory" : "practical";
}

absl::StatusOr<ParameterMode> ParseParameterMode(const std::string& name) {
  if (name == "theory") return ParameterMode::kTheory;
  if (name == "practical") return ParameterMode::kPractical;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown parameter mode '", name, "'"));
}

absl::Status ValidateMultipliers(const ConstantMultipliers& m) {
  for (double c : {m.knockout_repetitions, m.srr_repetitions,
                   m.knockout_subsample, m.srr_subsample}) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      return absl::InvalidArgumentError("constant multipliers must be positive");
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateBokserrParams(const BokserrParams& params) {
  if (params.t1 < 1) return absl::InvalidArgumentError("t1 must be >= 1");
  if (params.t2 < 0) return absl::InvalidArgumentError("t2 must be >= 0");
  if (params.eta < 2) return absl::InvalidArgumentError("eta must be >= 2");
  return ValidateMultipliers(params.multipliers);
}

nlohmann::json BokserrParamsToJson(const BokserrParams& params) {
  const ConstantMultipliers& m = params.multipliers;
  return {{"mode", ParameterModeName(params.mode)},
          {"t1", params.t1},
          {"t1_unclamped", params.t1_unclamped},
          {"t2", params.t2},
          {"k_prime", params.k_prime},
          {"eta", params.eta},
          {"scale_r", m.knockout_repetitions},
          {"scale_rep", m.srr_repetitions},
          {"scale_n1", m.knockout_subsample},
          {"scale_n2", m.srr_subsample}};
}

int64_t CeilTolerant(double x) {
  return static_cast<int64_t>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

int64_t LogLogCeil(double x) {
  if (!(x > 2.0)) return 1;
  return std::max<int64_t>(1, CeilTolerant(std::log2(std::log2(x))));
}

absl::StatusOr<BokserrParams> MakeBokserrParams(
    int64_t k, double beta, ParameterMode mode,
    const ConstantMultipliers& multipliers) {
  if (k < 2) return absl::InvalidArgumentError("BOKSERR parameters need k >= 2");
  if (!(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError("beta must lie in (0, 1)");
  }
  BokserrParams params;
  params.mode = mode;
  if (mode == ParameterMode::kPractical) {
    RETURN_IF_ERROR(ValidateMultipliers(multipliers));
    params.multipliers = multipliers;
  }
  const int64_t ll_k = LogLogCeil(static_cast<double>(k));
  params.t1_unclamped = (5 + 4 * LogLogCeil(3.0 / beta)) * ll_k;
  const int64_t singleton_rounds = std::max<int64_t>(
      1, CeilTolerant(std::log(static_cast<double>(k)) / std::log(1.5)));
  params.t1 = std::min(params.t1_unclamped, singleton_rounds);
  params.t2 = std::max<int64_t>(0, ll_k - 1);
  params.k_prime =
      static_cast<double>(k) / std::pow(1.5, static_cast<double>(params.t1));
  const double root = std::pow(params.k_prime,
                               1.0 / std::ldexp(1.0, static_cast<int>(params.t2 + 1)));
  params.eta = std::max<int64_t>(2, std::llround(root));
  return params;
}

int64_t KnockoutRepetitions(int64_t round, double beta, double multiplier) {
  const double r = multiplier * 32.0 *
                   std::pow(4.0 / 3.0, static_cast<double>(round)) *
                   LogInverse(beta);
  return std::max<int64_t>(1, CeilTolerant(r));
}

int64_t KnockoutSubsampleSize(int64_t k, double beta, int64_t t,
                              double multiplier) {
  const double n = multiplier * 8.0 * LogInverse(beta) *
                   std::pow(1.5, static_cast<double>(t));
  return std::max<int64_t>(std::min<int64_t>(k, 1), ClampToCount(n, k));
}

int64_t MaxKnockoutSurvivors(int64_t n) {
  if (n <= 1) return n;
  return std::min(n, 4 * (n / 2) / 3);
}

int64_t SrrRepetitions(double beta, double multiplier) {
  return std::max<int64_t>(1, CeilTolerant(multiplier * LogInverse(beta)));
}

int64_t SrrSubsampleSize(int64_t k, double beta, int64_t eta, int64_t t,
                         double multiplier) {
  const double grown =
      std::pow(static_cast<double>(eta), std::ldexp(1.0, static_cast<int>(
                                                             std::min<int64_t>(t, 60))));
  const double n = multiplier * 2.0 * grown * LogInverse(beta);
  return std::max<int64_t>(std::min<int64_t>(k, 1), ClampToCount(n, k));
}

int64_t SquareGroupSize(int64_t eta) {
  if (eta >= kMaxGroupSize / eta) return kMaxGroupSize;
  return eta * eta;
}

double KnockoutSizeBound(int64_t k, int64_t round) {
  return static_cast<double>(k) / std::pow(1.5, static_cast<double>(round));
}

double SrrSizeBound(int64_t k, double beta, int64_t eta, int64_t round) {
  const double log_term =
      std::pow(LogInverse(beta), static_cast<double>(round));
  const double eta_term =
      std::pow(static_cast<double>(eta),
               std::ldexp(1.0, static_cast<int>(round)) - 1.0);
  return std::max(1.0, static_cast<double>(k) * log_term / eta_term);
}

}  // namespace hsel
