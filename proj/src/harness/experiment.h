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

// Seeded experiment runner: builds an instance per trial, wires an oracle and
// a selector, and aggregates trials into CSV rows and a JSON summary.

#ifndef HSEL_HARNESS_EXPERIMENT_H_
#define HSEL_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "distributions/instance.h"
#include "json.hpp"
#include "selectors/bokserr_params.h"
#include "selectors/budget.h"
#include "selectors/selection_outcome.h"

namespace hsel {

enum class SelectorKind {
  kBokserr,
  kRoundRobin,
  kMdeVariant,
  kKnockoutOnly,
  kSrrOnly,
};

enum class OracleKind { kExact, kEmpirical, kRandomizedResponse };

const char* SelectorKindName(SelectorKind kind);
const char* OracleKindName(OracleKind kind);

// Accepts "bokserr", "round_robin"/"round-robin", "mde_variant"/"mde",
// "knockout_only"/"knockout", "srr_only"/"srr".
absl::StatusOr<SelectorKind> ParseSelectorKind(const std::string& name);
// Accepts "exact", "empirical", "rr".
absl::StatusOr<OracleKind> ParseOracleKind(const std::string& name);

struct ExperimentConfig {
  InstanceSpec instance;
  SelectorKind selector = SelectorKind::kBokserr;
  OracleKind oracle = OracleKind::kRandomizedResponse;
  double epsilon = 1.0;
  double alpha = 0.1;
  double beta = 0.1;
  int64_t trials = 1;
  uint64_t base_seed = 0;
  ParameterMode mode = ParameterMode::kPractical;
  ConstantMultipliers multipliers = {0.25, 0.25, 0.25, 0.25};
  // Database size; defaults to the selector's worst-case budget.
  std::optional<int64_t> db_size;
  bool track_reads = false;
  std::string csv_path;
  std::string summary_path;
};

absl::Status ValidateExperimentConfig(const ExperimentConfig& config);
nlohmann::json ExperimentConfigToJson(const ExperimentConfig& config);

// Parameters handed to the BOKSERR family for a class of k members.
absl::StatusOr<BokserrParams> ParamsFor(const ExperimentConfig& config,
                                        int64_t k);

// Worst-case sample budget of one trial under the configured oracle.
absl::StatusOr<BudgetTable> TrialBudget(const ExperimentConfig& config);

struct TrialRecord {
  uint64_t seed = 0;
  int64_t chosen_index = -1;  // -1 when the run failed
  double tv_error = 0.0;
  double opt = 0.0;
  bool success = false;  // tv_error <= 9 opt + alpha
  int64_t rounds_used = 0;
  int64_t samples_consumed = 0;
  double wall_time_seconds = 0.0;

  // Empty on a completed run.
  std::string failure_reason;
  bool budget_exhausted = false;
  // Consumption re-derived from the round log.
  int64_t accounted_samples = 0;
  bool double_read = false;
  std::vector<RoundRecord> round_log;
};

// Runs one trial with random streams derived from `seed`. Oracle exhaustion
// yields a failed record, not an error.
absl::StatusOr<TrialRecord> RunTrial(const ExperimentConfig& config,
                                     uint64_t seed);

struct ExperimentSummary {
  int64_t trials = 0;
  int64_t failures = 0;
  int64_t budget_exhausted = 0;
  double failure_rate = 0.0;
  double failure_rate_low = 0.0;   // Wilson 95% interval
  double failure_rate_high = 0.0;
  double mean_samples = 0.0;
  int64_t max_samples = 0;
  double mean_rounds = 0.0;
  int64_t budget_estimate = 0;
  std::vector<TrialRecord> records;  // ascending seed
};

// Wilson score interval at 95% for `failures` out of `trials`.
std::pair<double, double> WilsonInterval(int64_t failures, int64_t trials);

std::string TrialCsvHeader();
std::string TrialCsvRow(const TrialRecord& record);
nlohmann::json SummaryToJson(const ExperimentConfig& config,
                             const ExperimentSummary& summary);

// Runs trials base_seed .. base_seed + trials - 1 and writes the CSV and
// summary files named in the config, if any.
absl::StatusOr<ExperimentSummary> RunExperiment(const ExperimentConfig& config);

}  // namespace hsel

#endif  // HSEL_HARNESS_EXPERIMENT_H_
