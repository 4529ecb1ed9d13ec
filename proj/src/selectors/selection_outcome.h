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

#ifndef HSEL_SELECTORS_SELECTION_OUTCOME_H_
#define HSEL_SELECTORS_SELECTION_OUTCOME_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "oracles/privacy_ledger.h"
#include "oracles/sq_oracle.h"
#include "oracles/workload.h"

namespace hsel {

// One oracle submission made during a selection run.
struct RoundRecord {
  int64_t round = 0;        // 1-based over the whole run
  std::string stage;        // "round_robin", "mde", "knockout", "srr"
  int64_t stage_round = 0;  // 1-based within the stage
  int64_t workload_size = 0;
  int64_t critical_count = 0;
  double alpha = 0.0;
  double beta = 0.0;
  int64_t samples_consumed = 0;

  bool operator==(const RoundRecord&) const = default;
};

struct SelectionOutcome {
  size_t chosen_index = 0;
  int64_t rounds_used = 0;
  PrivacyLedger ledger_snapshot;
  std::vector<RoundRecord> round_log;
  // Named intermediate candidate lists (indices into the input class), e.g.
  // "K1", "K2", "R1", "R2", "final" for BOKSERR or "L1", "L2" for a
  // two-list stage.
  std::map<std::string, std::vector<size_t>> lists;
};

// Output of a stage that returns two candidate lists: the survivors of its
// elimination rounds and an independent uniform sub-sample of its input.
struct StageLists {
  std::vector<size_t> survivors;   // L1
  std::vector<size_t> subsample;   // L2, ascending
  std::vector<int64_t> round_sizes;  // survivors after each executed round
};

nlohmann::json RoundRecordToJson(const RoundRecord& record);
nlohmann::json OutcomeToJson(const SelectionOutcome& outcome);

// Serializes submissions to an oracle and logs each one. A NULL answer from
// the oracle surfaces as kResourceExhausted "insufficient budget" naming the
// stage and round that ran dry.
class OracleSession {
 public:
  explicit OracleSession(StatisticalQueryOracle& oracle) : oracle_(oracle) {}

  absl::StatusOr<std::vector<double>> Submit(std::string_view stage,
                                             int64_t stage_round,
                                             const Workload& workload);

  StatisticalQueryOracle& oracle() { return oracle_; }
  const std::vector<RoundRecord>& log() const { return log_; }
  int64_t rounds() const { return static_cast<int64_t>(log_.size()); }

  // Fills rounds_used, ledger_snapshot and round_log.
  void Finish(SelectionOutcome& outcome) const;

 private:
  StatisticalQueryOracle& oracle_;
  std::vector<RoundRecord> log_;
};

}  // namespace hsel

#endif  // HSEL_SELECTORS_SELECTION_OUTCOME_H_
