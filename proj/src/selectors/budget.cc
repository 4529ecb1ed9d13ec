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

#include "selectors/budget.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "base/status_macros.h"
#include "oracles/randomized_response.h"

namespace hsel {
namespace {

absl::StatusOr<int64_t> CheckedMul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    return absl::OutOfRangeError("sample budget overflows int64");
  }
  return out;
}

absl::StatusOr<int64_t> CheckedAdd(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    return absl::OutOfRangeError("sample budget overflows int64");
  }
  return out;
}

int64_t PairCount(int64_t n) { return n * (n - 1) / 2; }

class TableBuilder {
 public:
  explicit TableBuilder(const SampleCost& cost) : cost_(cost) {}

  absl::Status Add(const std::string& stage, int64_t stage_round,
                   int64_t candidates, int64_t workload_size,
                   int64_t critical_count, double alpha, double beta) {
    if (workload_size <= 0) return absl::OkStatus();
    BudgetRow row{stage,          stage_round, candidates, workload_size,
                  critical_count, alpha,       beta,       0};
    ASSIGN_OR_RETURN(row.samples,
                     cost_(alpha, beta, critical_count, workload_size));
    ASSIGN_OR_RETURN(table_.total_samples,
                     CheckedAdd(table_.total_samples, row.samples));
    table_.rows.push_back(std::move(row));
    return absl::OkStatus();
  }

  BudgetTable Build() && { return std::move(table_); }

 private:
  const SampleCost& cost_;
  BudgetTable table_;
};

// Worst-case knockout; returns the simulated |L1|.
absl::StatusOr<int64_t> KnockoutRows(TableBuilder& table, int64_t k,
                                     double alpha, double beta, int64_t t,
                                     double c_r) {
  int64_t n = k;
  for (int64_t round = 1; round <= t && n > 1; ++round) {
    const int64_t r = KnockoutRepetitions(round, beta, c_r);
    ASSIGN_OR_RETURN(const int64_t queries, CheckedMul(n / 2, r));
    RETURN_IF_ERROR(table.Add("knockout", round, n, queries, r, alpha, beta));
    n = MaxKnockoutSurvivors(n);
  }
  return n;
}

// Worst-case SRR; returns the simulated |L1|.
absl::StatusOr<int64_t> SrrRows(TableBuilder& table, int64_t k, double alpha,
                                double beta, int64_t eta, int64_t t,
                                double c_rep) {
  const int64_t reps = SrrRepetitions(beta, c_rep);
  int64_t n = k;
  int64_t g = eta;
  for (int64_t round = 1; round <= t && n > 1; ++round) {
    const int64_t size = std::min(g, n);
    const int64_t full = n / size;
    const int64_t rem = n % size;
    ASSIGN_OR_RETURN(const int64_t full_pairs,
                     CheckedMul(full, PairCount(size)));
    ASSIGN_OR_RETURN(const int64_t pass,
                     CheckedAdd(full_pairs, PairCount(rem)));
    ASSIGN_OR_RETURN(const int64_t queries, CheckedMul(reps, pass));
    RETURN_IF_ERROR(
        table.Add("srr", round, n, queries, queries, alpha, beta));
    const int64_t groups = full + (rem > 0 ? 1 : 0);
    n = std::min(n, reps * groups);
    g = SquareGroupSize(g);
  }
  return n;
}

}  // namespace

SampleCost OracleCost(const StatisticalQueryOracle& oracle) {
  return [&oracle](double alpha, double beta, int64_t m, int64_t n) {
    return oracle.SamplesFor(alpha, beta, m, n);
  };
}

SampleCost RandomizedResponseCost(double epsilon) {
  return [epsilon](double alpha, double beta, int64_t m,
                   int64_t n) -> absl::StatusOr<int64_t> {
    ASSIGN_OR_RETURN(const int64_t p, PerQueryBudget(alpha, beta, m, epsilon));
    return CheckedMul(p, n);
  };
}

nlohmann::json BudgetTableToJson(const BudgetTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BudgetRow& row : table.rows) {
    rows.push_back({{"stage", row.stage},
                    {"stage_round", row.stage_round},
                    {"candidates", row.candidates},
                    {"workload_size", row.workload_size},
                    {"critical_count", row.critical_count},
                    {"alpha", row.alpha},
                    {"beta", row.beta},
                    {"samples", row.samples}});
  }
  return {{"rows", rows},
          {"rounds", table.rounds()},
          {"total_samples", table.total_samples}};
}

std::string FormatBudgetTable(const BudgetTable& table) {
  std::string out = absl::StrFormat("%-9s %5s %10s %12s %10s %10s %10s %16s\n",
                                    "stage", "round", "candidates", "queries",
                                    "critical", "alpha", "beta", "samples");
  for (const BudgetRow& row : table.rows) {
    absl::StrAppendFormat(&out, "%-9s %5d %10d %12d %10d %10.6g %10.6g %16d\n",
                          row.stage, row.stage_round, row.candidates,
                          row.workload_size, row.critical_count, row.alpha,
                          row.beta, row.samples);
  }
  absl::StrAppendFormat(&out, "rounds %d total_samples %d\n", table.rounds(),
                        table.total_samples);
  return out;
}

absl::StatusOr<BudgetTable> PipelineBudget(int64_t k, double alpha,
                                           double beta,
                                           const BokserrParams& params,
                                           Pipeline pipeline,
                                           const SampleCost& cost) {
  if (k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError("alpha and beta must lie in (0, 1)");
  }
  RETURN_IF_ERROR(ValidateBokserrParams(params));
  TableBuilder table(cost);
  if (k == 1) return std::move(table).Build();
  const ConstantMultipliers& c = params.multipliers;
  const double stage_alpha = alpha * kStageAlphaShare;
  const double stage_beta = beta * kBetaShare;

  int64_t finalists = 0;
  if (pipeline != Pipeline::kSrrOnly) {
    ASSIGN_OR_RETURN(const int64_t k1,
                     KnockoutRows(table, k, stage_alpha, stage_beta, params.t1,
                                  c.knockout_repetitions));
    const int64_t k2 = KnockoutSubsampleSize(k, stage_beta, params.t1,
                                             c.knockout_subsample);
    if (pipeline == Pipeline::kKnockoutOnly) {
      finalists = k1 + k2;
    } else {
      ASSIGN_OR_RETURN(const int64_t r1,
                       SrrRows(table, k1, stage_alpha, stage_beta, params.eta,
                               params.t2, c.srr_repetitions));
      const int64_t r2 = SrrSubsampleSize(k1, stage_beta, params.eta,
                                          params.t2, c.srr_subsample);
      finalists = k2 + r1 + r2;
    }
  } else {
    ASSIGN_OR_RETURN(const int64_t r1,
                     SrrRows(table, k, stage_alpha, stage_beta, params.eta,
                             params.t2, c.srr_repetitions));
    finalists = r1 + SrrSubsampleSize(k, stage_beta, params.eta, params.t2,
                                      c.srr_subsample);
  }
  finalists = std::min(k, finalists);
  RETURN_IF_ERROR(table.Add("mde", 1, finalists, PairCount(finalists),
                            PairCount(finalists), alpha * kFinalAlphaShare,
                            stage_beta));
  return std::move(table).Build();
}

absl::StatusOr<BudgetTable> AllPairsBudget(int64_t k, double alpha,
                                           double beta, const std::string& stage,
                                           const SampleCost& cost) {
  if (k < 1) return absl::InvalidArgumentError("k must be >= 1");
  TableBuilder table(cost);
  RETURN_IF_ERROR(
      table.Add(stage, 1, k, PairCount(k), PairCount(k), alpha, beta));
  return std::move(table).Build();
}

absl::StatusOr<BudgetTable> BudgetEstimate(int64_t k, double alpha,
                                           double beta, double epsilon,
                                           const BokserrParams& params) {
  return PipelineBudget(k, alpha, beta, params, Pipeline::kFull,
                        RandomizedResponseCost(epsilon));
}

absl::StatusOr<int64_t> SamplesFromLog(std::span<const RoundRecord> log,
                                       const SampleCost& cost) {
  int64_t total = 0;
  for (const RoundRecord& record : log) {
    ASSIGN_OR_RETURN(const int64_t samples,
                     cost(record.alpha, record.beta, record.critical_count,
                          record.workload_size));
    ASSIGN_OR_RETURN(total, CheckedAdd(total, samples));
  }
  return total;
}

}  // namespace hsel
