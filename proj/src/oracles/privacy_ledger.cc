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

#include "oracles/privacy_ledger.h"

#include <cmath>

namespace hsel {

nlohmann::json LedgerToJson(const PrivacyLedger& ledger) {
  nlohmann::json json;
  if (std::isfinite(ledger.epsilon)) {
    json["epsilon"] = ledger.epsilon;
  } else {
    json["epsilon"] = nullptr;
  }
  json["samples_consumed"] = ledger.samples_consumed;
  json["oracle_rounds"] = ledger.oracle_rounds;
  json["queries_answered"] = ledger.queries_answered;
  return json;
}

}  // namespace hsel
