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

#ifndef HSEL_ORACLES_SQ_ORACLE_H_
#define HSEL_ORACLES_SQ_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "base/random.h"
#include "distributions/discrete_distribution.h"
#include "oracles/database.h"
#include "oracles/privacy_ledger.h"
#include "oracles/randomized_response.h"
#include "oracles/workload.h"

namespace hsel {

// Statistical query oracle with critical queries. Answer() returns one real
// per query, in submission order, estimating h[W_i]; for any fixed set U of
// m = w.critical_count() queries, all answers in U are within alpha with
// probability at least 1 - beta.
//
// Answer() fails with kInvalidArgument for a malformed workload and with
// kResourceExhausted when the backing database cannot cover the submission
// (the NULL result of the one-pass sample store). A NULL submission consumes
// nothing and is not counted as a round.
class StatisticalQueryOracle {
 public:
  virtual ~StatisticalQueryOracle() = default;

  virtual absl::StatusOr<std::vector<double>> Answer(const Workload& w) = 0;

  // Samples a submission of n queries with these parameters consumes.
  virtual absl::StatusOr<int64_t> SamplesFor(double alpha, double beta,
                                             int64_t m, int64_t n) const = 0;

  virtual const PrivacyLedger& ledger() const = 0;
  virtual std::string name() const = 0;
};

// Returns h[W_i] exactly and consumes no samples.
class ExactOracle : public StatisticalQueryOracle {
 public:
  explicit ExactOracle(DiscreteDistribution h) : h_(std::move(h)) {}

  absl::StatusOr<std::vector<double>> Answer(const Workload& w) override;
  absl::StatusOr<int64_t> SamplesFor(double, double, int64_t,
                                     int64_t) const override {
    return 0;
  }
  const PrivacyLedger& ledger() const override { return ledger_; }
  std::string name() const override { return "exact"; }

 private:
  DiscreteDistribution h_;
  PrivacyLedger ledger_;
};

// Non-private baseline: every query of a workload is answered by its
// empirical frequency on one shared block of ceil(ln(2n/beta)/(2 alpha^2))
// fresh samples, which is accurate on all n queries at once.
class EmpiricalOracle : public StatisticalQueryOracle {
 public:
  explicit EmpiricalOracle(Database db) : db_(std::move(db)) {}

  absl::StatusOr<std::vector<double>> Answer(const Workload& w) override;
  absl::StatusOr<int64_t> SamplesFor(double alpha, double beta, int64_t m,
                                     int64_t n) const override;
  const PrivacyLedger& ledger() const override { return ledger_; }
  std::string name() const override { return "empirical"; }

  const Database& database() const { return db_; }
  Database& mutable_database() { return db_; }

 private:
  Database db_;
  PrivacyLedger ledger_;
};

// eps-LDP oracle. Query i is answered from its own block of
// p = PerQueryBudget(alpha, beta, m, eps) fresh samples, taken contiguously
// in submission order; each sample releases exactly one randomized-response
// bit of its indicator and the answer is the de-biased mean
//   c * (mean released bit - 1/(e^eps + 1)),  c = (e^eps + 1)/(e^eps - 1).
// Answers are unbiased and are not clipped to [0, 1].
class RandomizedResponseOracle : public StatisticalQueryOracle {
 public:
  RandomizedResponseOracle(Database db, RandomizedResponse rr,
                           uint64_t noise_seed);

  absl::StatusOr<std::vector<double>> Answer(const Workload& w) override;
  absl::StatusOr<int64_t> SamplesFor(double alpha, double beta, int64_t m,
                                     int64_t n) const override;
  const PrivacyLedger& ledger() const override { return ledger_; }
  std::string name() const override { return "rr"; }

  const RandomizedResponse& mechanism() const { return rr_; }
  const Database& database() const { return db_; }
  Database& mutable_database() { return db_; }

 private:
  Database db_;
  RandomizedResponse rr_;
  Rng noise_;
  PrivacyLedger ledger_;
  std::vector<uint8_t> member_;
  std::vector<uint64_t> draws_;
};

}  // namespace hsel

#endif  // HSEL_ORACLES_SQ_ORACLE_H_
