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

#include "harness/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "base/random.h"
#include "base/status_macros.h"
#include "oracles/database.h"
#include "oracles/randomized_response.h"
#include "oracles/sq_oracle.h"
#include "selectors/bokserr.h"
#include "selectors/tournament.h"

namespace hsel {
namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr double kSuccessFactor = 9.0;
constexpr double kSlack = 1e-12;

absl::StatusOr<std::unique_ptr<StatisticalQueryOracle>> MakeOracle(
    const ExperimentConfig& config, const DiscreteDistribution& h,
    uint64_t seed, int64_t db_size) {
  switch (config.oracle) {
    case OracleKind::kExact:
      return std::make_unique<ExactOracle>(h);
    case OracleKind::kEmpirical: {
      Database db = Database::Generated(
          h, DeriveSeed(seed, SeedStream::kDatabase), db_size);
      if (config.track_reads) db.EnableReadTracking();
      return std::make_unique<EmpiricalOracle>(std::move(db));
    }
    case OracleKind::kRandomizedResponse: {
      ASSIGN_OR_RETURN(RandomizedResponse rr,
                       RandomizedResponse::Create(config.epsilon));
      Database db = Database::Generated(
          h, DeriveSeed(seed, SeedStream::kDatabase), db_size);
      if (config.track_reads) db.EnableReadTracking();
      return std::make_unique<RandomizedResponseOracle>(
          std::move(db), rr, DeriveSeed(seed, SeedStream::kOracleNoise));
    }
  }
  return absl::InvalidArgumentError("unknown oracle");
}

const Database* DatabaseOf(const StatisticalQueryOracle& oracle) {
  if (auto* e = dynamic_cast<const EmpiricalOracle*>(&oracle)) {
    return &e->database();
  }
  if (auto* r = dynamic_cast<const RandomizedResponseOracle*>(&oracle)) {
    return &r->database();
  }
  return nullptr;
}

Pipeline PipelineOf(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kKnockoutOnly:
      return Pipeline::kKnockoutOnly;
    case SelectorKind::kSrrOnly:
      return Pipeline::kSrrOnly;
    default:
      return Pipeline::kFull;
  }
}

absl::StatusOr<BudgetTable> BudgetWithCost(const ExperimentConfig& config,
                                           const SampleCost& cost) {
  const int64_t k = config.instance.k;
  switch (config.selector) {
    case SelectorKind::kRoundRobin:
      return AllPairsBudget(k, config.alpha, config.beta, "round_robin", cost);
    case SelectorKind::kMdeVariant:
      return AllPairsBudget(k, config.alpha, config.beta, "mde", cost);
    default: {
      ASSIGN_OR_RETURN(const BokserrParams params, ParamsFor(config, k));
      return PipelineBudget(k, config.alpha, config.beta, params,
                            PipelineOf(config.selector), cost);
    }
  }
}

std::string FormatDouble(double x) { return absl::StrFormat("%.17g", x); }

}  // namespace

const char* SelectorKindName(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kBokserr:
      return "bokserr";
    case SelectorKind::kRoundRobin:
      return "round_robin";
    case SelectorKind::kMdeVariant:
      return "mde_variant";
    case SelectorKind::kKnockoutOnly:
      return "knockout_only";
    case SelectorKind::kSrrOnly:
      return "srr_only";
  }
  return "unknown";
}

const char* OracleKindName(OracleKind kind) {
  switch (kind) {
    case OracleKind::kExact:
      return "exact";
    case OracleKind::kEmpirical:
      return "empirical";
    case OracleKind::kRandomizedResponse:
      return "rr";
  }
  return "unknown";
}

absl::StatusOr<SelectorKind> ParseSelectorKind(const std::string& name) {
  if (name == "bokserr") return SelectorKind::kBokserr;
  if (name == "round_robin" || name == "round-robin") {
    return SelectorKind::kRoundRobin;
  }
  if (name == "mde_variant" || name == "mde") return SelectorKind::kMdeVariant;
  if (name == "knockout_only" || name == "knockout") {
    return SelectorKind::kKnockoutOnly;
  }
  if (name == "srr_only" || name == "srr") return SelectorKind::kSrrOnly;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown selector '", name, "'"));
}

absl::StatusOr<OracleKind> ParseOracleKind(const std::string& name) {
  if (name == "exact") return OracleKind::kExact;
  if (name == "empirical") return OracleKind::kEmpirical;
  if (name == "rr") return OracleKind::kRandomizedResponse;
  return absl::InvalidArgumentError(absl::StrCat("unknown oracle '", name, "'"));
}

absl::Status ValidateExperimentConfig(const ExperimentConfig& config) {
  RETURN_IF_ERROR(ValidateInstanceSpec(config.instance));
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    return absl::InvalidArgumentError("alpha must lie in (0, 1)");
  }
  if (!(config.beta > 0.0 && config.beta < 1.0)) {
    return absl::InvalidArgumentError("beta must lie in (0, 1)");
  }
  if (config.oracle == OracleKind::kRandomizedResponse) {
    RETURN_IF_ERROR(RandomizedResponse::Create(config.epsilon).status());
  }
  if (config.trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (config.db_size.has_value() && *config.db_size < 0) {
    return absl::InvalidArgumentError("db size must be >= 0");
  }
  RETURN_IF_ERROR(ValidateMultipliers(config.multipliers));
  return absl::OkStatus();
}

nlohmann::json ExperimentConfigToJson(const ExperimentConfig& config) {
  nlohmann::json json = {
      {"instance", InstanceSpecToJson(config.instance)},
      {"selector", SelectorKindName(config.selector)},
      {"oracle", OracleKindName(config.oracle)},
      {"alpha", config.alpha},
      {"beta", config.beta},
      {"trials", config.trials},
      {"base_seed", config.base_seed},
      {"mode", ParameterModeName(config.mode)},
      {"scale_r", config.multipliers.knockout_repetitions},
      {"scale_rep", config.multipliers.srr_repetitions},
      {"scale_n1", config.multipliers.knockout_subsample},
      {"scale_n2", config.multipliers.srr_subsample},
  };
  json["epsilon"] = config.oracle == OracleKind::kRandomizedResponse
                        ? nlohmann::json(config.epsilon)
                        : nlohmann::json(nullptr);
  json["db_size"] = config.db_size.has_value()
                        ? nlohmann::json(*config.db_size)
                        : nlohmann::json(nullptr);
  return json;
}

absl::StatusOr<BokserrParams> ParamsFor(const ExperimentConfig& config,
                                        int64_t k) {
  if (k < 2) return BokserrParams{};
  return MakeBokserrParams(k, config.beta, config.mode, config.multipliers);
}

absl::StatusOr<BudgetTable> TrialBudget(const ExperimentConfig& config) {
  if (config.oracle == OracleKind::kRandomizedResponse) {
    return BudgetWithCost(config, RandomizedResponseCost(config.epsilon));
  }
  ASSIGN_OR_RETURN(
      std::unique_ptr<StatisticalQueryOracle> probe,
      MakeOracle(config, *DiscreteDistribution::Create({1.0}), 0, 0));
  return BudgetWithCost(config, OracleCost(*probe));
}

absl::StatusOr<TrialRecord> RunTrial(const ExperimentConfig& config,
                                     uint64_t seed) {
  RETURN_IF_ERROR(ValidateExperimentConfig(config));
  const auto start = std::chrono::steady_clock::now();
  TrialRecord record;
  record.seed = seed;
  ASSIGN_OR_RETURN(const Instance instance,
                   GenerateInstance(config.instance,
                                    DeriveSeed(seed, SeedStream::kInstance)));
  const HypothesisClass& hypotheses = instance.hypotheses;
  ASSIGN_OR_RETURN(const ClassDistance opt,
                   TvToClass(instance.target, hypotheses));
  record.opt = opt.distance;

  int64_t db_size = 0;
  if (config.db_size.has_value()) {
    db_size = *config.db_size;
  } else if (config.oracle != OracleKind::kExact) {
    ASSIGN_OR_RETURN(const BudgetTable budget, TrialBudget(config));
    db_size = budget.total_samples;
  }
  ASSIGN_OR_RETURN(std::unique_ptr<StatisticalQueryOracle> oracle,
                   MakeOracle(config, instance.target, seed, db_size));

  const int64_t k = static_cast<int64_t>(hypotheses.size());
  Rng rng(DeriveSeed(seed, SeedStream::kSelector));
  absl::StatusOr<SelectionOutcome> outcome;
  switch (config.selector) {
    case SelectorKind::kRoundRobin:
      outcome = RoundRobin(hypotheses, *oracle, config.alpha, config.beta);
      break;
    case SelectorKind::kMdeVariant:
      outcome = MdeVariant(hypotheses, *oracle, config.alpha, config.beta);
      break;
    default: {
      ASSIGN_OR_RETURN(const BokserrParams params, ParamsFor(config, k));
      outcome = Bokserr(hypotheses, *oracle, config.alpha, config.beta, params,
                        rng, PipelineOf(config.selector));
    }
  }

  record.samples_consumed = oracle->ledger().samples_consumed;
  if (const Database* db = DatabaseOf(*oracle)) {
    record.double_read = db->double_read_detected();
  }
  if (!outcome.ok()) {
    if (!absl::IsResourceExhausted(outcome.status())) return outcome.status();
    record.budget_exhausted = true;
    record.failure_reason = std::string(outcome.status().message());
    record.tv_error = std::nan("");
    record.rounds_used = oracle->ledger().oracle_rounds;
  } else {
    record.chosen_index = static_cast<int64_t>(outcome->chosen_index);
    ASSIGN_OR_RETURN(record.tv_error,
                     TvDistance(instance.target,
                                hypotheses[outcome->chosen_index]));
    record.success =
        record.tv_error <= kSuccessFactor * record.opt + config.alpha + kSlack;
    record.rounds_used = outcome->rounds_used;
    record.round_log = outcome->round_log;
    ASSIGN_OR_RETURN(record.accounted_samples,
                     SamplesFromLog(record.round_log, OracleCost(*oracle)));
  }
  record.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

std::pair<double, double> WilsonInterval(int64_t failures, int64_t trials) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = kZ95 * kZ95;
  const double center = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half =
      kZ95 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  const double low = failures == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = failures == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

std::string TrialCsvHeader() {
  return "seed,chosen_index,tv_error,opt,success,rounds_used,samples_consumed";
}

std::string TrialCsvRow(const TrialRecord& r) {
  return absl::StrCat(r.seed, ",", r.chosen_index, ",",
                      FormatDouble(r.tv_error), ",", FormatDouble(r.opt), ",",
                      r.success ? 1 : 0, ",", r.rounds_used, ",",
                      r.samples_consumed);
}

nlohmann::json SummaryToJson(const ExperimentConfig& config,
                             const ExperimentSummary& s) {
  nlohmann::json failures = nlohmann::json::array();
  double wall = 0.0;
  for (const TrialRecord& r : s.records) {
    wall += r.wall_time_seconds;
    if (!r.failure_reason.empty()) {
      failures.push_back({{"seed", r.seed}, {"reason", r.failure_reason}});
    }
  }
  return {{"config", ExperimentConfigToJson(config)},
          {"trials", s.trials},
          {"failures", s.failures},
          {"budget_exhausted", s.budget_exhausted},
          {"failure_rate", s.failure_rate},
          {"failure_rate_ci95", {s.failure_rate_low, s.failure_rate_high}},
          {"mean_samples_consumed", s.mean_samples},
          {"max_samples_consumed", s.max_samples},
          {"mean_rounds", s.mean_rounds},
          {"budget_estimate", s.budget_estimate},
          {"aborted_trials", failures},
          {"wall_time_seconds", wall}};
}

absl::StatusOr<ExperimentSummary> RunExperiment(
    const ExperimentConfig& config) {
  RETURN_IF_ERROR(ValidateExperimentConfig(config));
  ExperimentSummary summary;
  ASSIGN_OR_RETURN(const BudgetTable budget, TrialBudget(config));
  summary.budget_estimate = budget.total_samples;
  summary.trials = config.trials;
  double samples = 0.0;
  double rounds = 0.0;
  for (int64_t i = 0; i < config.trials; ++i) {
    ASSIGN_OR_RETURN(TrialRecord record,
                     RunTrial(config, config.base_seed +
                                          static_cast<uint64_t>(i)));
    if (!record.success) ++summary.failures;
    if (record.budget_exhausted) ++summary.budget_exhausted;
    samples += static_cast<double>(record.samples_consumed);
    rounds += static_cast<double>(record.rounds_used);
    summary.max_samples = std::max(summary.max_samples, record.samples_consumed);
    summary.records.push_back(std::move(record));
  }
  std::sort(summary.records.begin(), summary.records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return a.seed < b.seed;
            });
  const double n = static_cast<double>(config.trials);
  summary.failure_rate = static_cast<double>(summary.failures) / n;
  std::tie(summary.failure_rate_low, summary.failure_rate_high) =
      WilsonInterval(summary.failures, summary.trials);
  summary.mean_samples = samples / n;
  summary.mean_rounds = rounds / n;

  if (!config.csv_path.empty()) {
    std::ofstream csv(config.csv_path);
    if (!csv) {
      return absl::UnavailableError(
          absl::StrCat("cannot open ", config.csv_path));
    }
    csv << TrialCsvHeader() << "\n";
    for (const TrialRecord& r : summary.records) csv << TrialCsvRow(r) << "\n";
    if (!csv) {
      return absl::DataLossError(absl::StrCat("write failed: ", config.csv_path));
    }
  }
  if (!config.summary_path.empty()) {
    std::ofstream out(config.summary_path);
    if (!out) {
      return absl::UnavailableError(
          absl::StrCat("cannot open ", config.summary_path));
    }
    out << SummaryToJson(config, summary).dump(2) << "\n";
    if (!out) {
      return absl::DataLossError(
          absl::StrCat("write failed: ", config.summary_path));
    }
  }
  return summary;
}

}  // namespace hsel
