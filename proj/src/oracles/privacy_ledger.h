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

#ifndef HSEL_ORACLES_PRIVACY_LEDGER_H_
#define HSEL_ORACLES_PRIVACY_LEDGER_H_

#include <cstdint>
#include <limits>

#include "json.hpp"

namespace hsel {

// Consumption accounting for one database. `epsilon` is +infinity for the
// non-private oracles and serializes as null.
struct PrivacyLedger {
  double epsilon = std::numeric_limits<double>::infinity();
  int64_t samples_consumed = 0;
  int64_t oracle_rounds = 0;
  int64_t queries_answered = 0;

  bool operator==(const PrivacyLedger&) const = default;
};

nlohmann::json LedgerToJson(const PrivacyLedger& ledger);

}  // namespace hsel

#endif  // HSEL_ORACLES_PRIVACY_LEDGER_H_
