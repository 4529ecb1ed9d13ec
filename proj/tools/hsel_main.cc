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

// hsel: experiment and budget CLI.
//   hsel run ...     runs seeded trials, writes CSV rows and a JSON summary
//   hsel budget ...  prints the worst-case per-round sample budget
// Exit codes: 0 success, 1 runtime error, 2 config error, 3 budget exhausted.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "harness/experiment.h"
#include "selectors/budget.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct Flags {
  int64_t k = 16;
  int64_t domain = 32;
  std::string family = "planted";
  double delta = 0.0;
  std::string algo = "bokserr";
  std::string oracle = "rr";
  double eps = 1.0;
  double alpha = 0.1;
  double beta = 0.1;
  int64_t trials = 1;
  uint64_t seed = 0;
  std::string mode = "practical";
  double scale_r = 0.25;
  double scale_rep = 0.25;
  double scale_n1 = 0.25;
  double scale_n2 = 0.25;
  int64_t db_size = -1;
  std::string out;
  std::string summary;
  bool json = false;
};

void AddSharedOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.k, "class size")->capture_default_str();
  cmd->add_option("--eps", f.eps, "privacy level")->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "accuracy")->capture_default_str();
  cmd->add_option("--beta", f.beta, "failure probability")
      ->capture_default_str();
  cmd->add_option("--algo", f.algo,
                  "bokserr|round-robin|mde|knockout|srr")
      ->capture_default_str();
  cmd->add_option("--mode", f.mode, "theory|practical")->capture_default_str();
  cmd->add_option("--scale-r", f.scale_r, "knockout repetition multiplier")
      ->capture_default_str();
  cmd->add_option("--scale-rep", f.scale_rep, "SRR repetition multiplier")
      ->capture_default_str();
  cmd->add_option("--scale-n1", f.scale_n1, "knockout sub-sample multiplier")
      ->capture_default_str();
  cmd->add_option("--scale-n2", f.scale_n2, "SRR sub-sample multiplier")
      ->capture_default_str();
}

absl::StatusOr<hsel::ExperimentConfig> BuildConfig(const Flags& f) {
  hsel::ExperimentConfig config;
  auto family = hsel::ParseInstanceFamily(f.family);
  if (!family.ok()) return family.status();
  auto selector = hsel::ParseSelectorKind(f.algo);
  if (!selector.ok()) return selector.status();
  auto oracle = hsel::ParseOracleKind(f.oracle);
  if (!oracle.ok()) return oracle.status();
  auto mode = hsel::ParseParameterMode(f.mode);
  if (!mode.ok()) return mode.status();
  config.instance.family = *family;
  config.instance.k = f.k;
  config.instance.domain_size = f.domain;
  config.instance.delta = f.delta;
  config.selector = *selector;
  config.oracle = *oracle;
  config.epsilon = f.eps;
  config.alpha = f.alpha;
  config.beta = f.beta;
  config.trials = f.trials;
  config.base_seed = f.seed;
  config.mode = *mode;
  config.multipliers = {f.scale_r, f.scale_rep, f.scale_n1, f.scale_n2};
  if (f.db_size >= 0) config.db_size = f.db_size;
  config.csv_path = f.out;
  config.summary_path = f.summary;
  return config;
}

int Fail(int code, const absl::Status& status) {
  std::cerr << "hsel: " << status.message() << "\n";
  return code;
}

int RunCommand(const Flags& f) {
  absl::StatusOr<hsel::ExperimentConfig> config = BuildConfig(f);
  if (!config.ok()) return Fail(kExitConfig, config.status());
  if (absl::Status s = hsel::ValidateExperimentConfig(*config); !s.ok()) {
    return Fail(kExitConfig, s);
  }
  absl::StatusOr<hsel::ExperimentSummary> summary =
      hsel::RunExperiment(*config);
  if (!summary.ok()) {
    const bool bad_config = absl::IsInvalidArgument(summary.status()) ||
                            absl::IsOutOfRange(summary.status());
    return Fail(bad_config ? kExitConfig : kExitRuntime, summary.status());
  }
  std::cout << hsel::SummaryToJson(*config, *summary).dump(2) << "\n";
  if (summary->budget_exhausted > 0) {
    for (const hsel::TrialRecord& r : summary->records) {
      if (r.budget_exhausted) {
        std::cerr << "hsel: seed " << r.seed << ": " << r.failure_reason
                  << "\n";
      }
    }
    return kExitBudget;
  }
  return 0;
}

int BudgetCommand(Flags f) {
  f.oracle = "rr";
  f.domain = 2;
  absl::StatusOr<hsel::ExperimentConfig> config = BuildConfig(f);
  if (!config.ok()) return Fail(kExitConfig, config.status());
  if (absl::Status s = hsel::ValidateExperimentConfig(*config); !s.ok()) {
    return Fail(kExitConfig, s);
  }
  absl::StatusOr<hsel::BudgetTable> table = hsel::TrialBudget(*config);
  if (!table.ok()) return Fail(kExitConfig, table.status());
  if (f.json) {
    std::cout << hsel::BudgetTableToJson(*table).dump(2) << "\n";
  } else {
    std::cout << hsel::FormatBudgetTable(*table);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally private hypothesis selection experiments"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* run = app.add_subcommand("run", "run seeded selection trials");
  AddSharedOptions(run, f);
  run->add_option("--domain", f.domain, "domain size")->capture_default_str();
  run->add_option("--family", f.family, "planted|perturbed|dirichlet")
      ->capture_default_str();
  run->add_option("--delta", f.delta, "perturbation for the perturbed family")
      ->capture_default_str();
  run->add_option("--oracle", f.oracle, "exact|empirical|rr")
      ->capture_default_str();
  run->add_option("--trials", f.trials, "number of trials")
      ->capture_default_str();
  run->add_option("--seed", f.seed, "base seed")->capture_default_str();
  run->add_option("--db-size", f.db_size,
                  "database size (default: worst-case budget)");
  run->add_option("--out", f.out, "per-trial CSV path");
  run->add_option("--summary", f.summary, "JSON summary path");

  CLI::App* budget =
      app.add_subcommand("budget", "print the worst-case budget per round");
  AddSharedOptions(budget, f);
  budget->add_flag("--json", f.json, "emit JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  if (run->parsed()) return RunCommand(f);
  return BudgetCommand(f);
}
