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

#ifndef HSEL_TESTS_FAKE_ORACLE_H_
#define HSEL_TESTS_FAKE_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "base/random.h"
#include "oracles/randomized_response.h"
#include "oracles/sq_oracle.h"

namespace hsel::testing {

// Answers every query with an independent uniform draw in [0, 1] and charges
// the randomized-response cost, so selectors see arbitrary outcomes while the
// accounting stays comparable with the real oracle.
class RandomAnswerOracle : public StatisticalQueryOracle {
 public:
  RandomAnswerOracle(uint64_t seed, double epsilon)
      : rng_(seed), epsilon_(epsilon) {
    ledger_.epsilon = epsilon;
  }

  absl::StatusOr<std::vector<double>> Answer(const Workload& w) override {
    if (absl::Status s = w.Validate(); !s.ok()) return s;
    auto samples = SamplesFor(w.alpha(), w.beta(), w.critical_count(),
                              static_cast<int64_t>(w.size()));
    if (!samples.ok()) return samples.status();
    std::vector<double> out(w.size());
    for (double& x : out) x = UniformUnit(rng_);
    ledger_.samples_consumed += *samples;
    ++ledger_.oracle_rounds;
    ledger_.queries_answered += static_cast<int64_t>(w.size());
    return out;
  }

  absl::StatusOr<int64_t> SamplesFor(double alpha, double beta, int64_t m,
                                     int64_t n) const override {
    auto p = PerQueryBudget(alpha, beta, m, epsilon_);
    if (!p.ok()) return p.status();
    return *p * n;
  }

  const PrivacyLedger& ledger() const override { return ledger_; }
  std::string name() const override { return "random_answer"; }

 private:
  Rng rng_;
  double epsilon_;
  PrivacyLedger ledger_;
};

}  // namespace hsel::testing

#endif  // HSEL_TESTS_FAKE_ORACLE_H_
