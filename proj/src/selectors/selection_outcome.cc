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

#include "selectors/selection_outcome.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace hsel {

nlohmann::json RoundRecordToJson(const RoundRecord& record) {
  return {{"round", record.round},
          {"stage", record.stage},
          {"stage_round", record.stage_round},
          {"workload_size", record.workload_size},
          {"critical_count", record.critical_count},
          {"alpha", record.alpha},
          {"beta", record.beta},
          {"samples_consumed", record.samples_consumed}};
}

nlohmann::json OutcomeToJson(const SelectionOutcome& outcome) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const RoundRecord& r : outcome.round_log) {
    rounds.push_back(RoundRecordToJson(r));
  }
  nlohmann::json lists = nlohmann::json::object();
  for (const auto& [name, indices] : outcome.lists) lists[name] = indices;
  return {{"chosen_index", outcome.chosen_index},
          {"rounds_used", outcome.rounds_used},
          {"ledger", LedgerToJson(outcome.ledger_snapshot)},
          {"round_log", std::move(rounds)},
          {"lists", std::move(lists)}};
}

absl::StatusOr<std::vector<double>> OracleSession::Submit(
    std::string_view stage, int64_t stage_round, const Workload& workload) {
  const int64_t before = oracle_.ledger().samples_consumed;
  absl::StatusOr<std::vector<double>> answers = oracle_.Answer(workload);
  if (!answers.ok()) {
    if (absl::IsResourceExhausted(answers.status())) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "insufficient budget in stage ", std::string(stage), " round ", stage_round,
          ": ", answers.status().message()));
    }
    return answers.status();
  }
  RoundRecord record;
  record.round = rounds() + 1;
  record.stage = std::string(stage);
  record.stage_round = stage_round;
  record.workload_size = static_cast<int64_t>(workload.size());
  record.critical_count = workload.critical_count();
  record.alpha = workload.alpha();
  record.beta = workload.beta();
  record.samples_consumed = oracle_.ledger().samples_consumed - before;
  log_.push_back(std::move(record));
  return answers;
}

void OracleSession::Finish(SelectionOutcome& outcome) const {
  outcome.rounds_used = rounds();
  outcome.ledger_snapshot = oracle_.ledger();
  outcome.round_log = log_;
}

}  // namespace hsel
