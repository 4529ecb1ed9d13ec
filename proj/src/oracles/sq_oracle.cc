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

#include "oracles/sq_oracle.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "base/status_macros.h"
#include "kernels/simd_kernels.h"

namespace hsel {
namespace {

absl::Status CheckWorkload(const Workload& w, size_t domain_size) {
  RETURN_IF_ERROR(w.Validate());
  if (w.domain_size() != domain_size) {
    return absl::InvalidArgumentError(
        absl::StrCat("workload domain ", w.domain_size(),
                     " does not match oracle domain ", domain_size));
  }
  return absl::OkStatus();
}

absl::Status Exhausted(int64_t needed, int64_t remaining) {
  return absl::ResourceExhaustedError(
      absl::StrCat("NULL: submission needs ", needed, " samples, database has ",
                   remaining, " left"));
}

}  // namespace

absl::StatusOr<std::vector<double>> ExactOracle::Answer(const Workload& w) {
  RETURN_IF_ERROR(CheckWorkload(w, h_.domain_size()));
  std::vector<double> answers(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    answers[i] = kernels::MaskedSum(h_.weights(), w.query(i).words);
  }
  ++ledger_.oracle_rounds;
  ledger_.queries_answered += static_cast<int64_t>(w.size());
  return answers;
}

absl::StatusOr<int64_t> EmpiricalOracle::SamplesFor(double alpha, double beta,
                                                    int64_t /*m*/,
                                                    int64_t n) const {
  // Accuracy on the whole workload: critical count taken as n.
  return PerQueryBudget(alpha, beta, n, std::numeric_limits<double>::infinity());
}

absl::StatusOr<std::vector<double>> EmpiricalOracle::Answer(const Workload& w) {
  RETURN_IF_ERROR(w.Validate());
  ASSIGN_OR_RETURN(const int64_t block,
                   SamplesFor(w.alpha(), w.beta(), w.critical_count(),
                              static_cast<int64_t>(w.size())));
  if (block > db_.remaining()) return Exhausted(block, db_.remaining());
  const std::span<const uint32_t> samples = *db_.Take(block);
  std::vector<double> answers(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const EventSetView q = w.query(i);
    int64_t hits = 0;
    for (uint32_t x : samples) {
      if (x >= q.domain_size) {
        return absl::InvalidArgumentError("sample outside the query domain");
      }
      hits += q.Contains(x) ? 1 : 0;
    }
    answers[i] = static_cast<double>(hits) / static_cast<double>(block);
  }
  ledger_.samples_consumed += block;
  ++ledger_.oracle_rounds;
  ledger_.queries_answered += static_cast<int64_t>(w.size());
  return answers;
}

RandomizedResponseOracle::RandomizedResponseOracle(Database db,
                                                   RandomizedResponse rr,
                                                   uint64_t noise_seed)
    : db_(std::move(db)), rr_(rr), noise_(noise_seed) {
  ledger_.epsilon = rr_.epsilon();
}

absl::StatusOr<int64_t> RandomizedResponseOracle::SamplesFor(double alpha,
                                                             double beta,
                                                             int64_t m,
                                                             int64_t n) const {
  ASSIGN_OR_RETURN(const int64_t p,
                   PerQueryBudget(alpha, beta, m, rr_.epsilon()));
  if (n > 0 && p > std::numeric_limits<int64_t>::max() / n) {
    return absl::OutOfRangeError("workload sample budget overflows");
  }
  return p * n;
}

absl::StatusOr<std::vector<double>> RandomizedResponseOracle::Answer(
    const Workload& w) {
  RETURN_IF_ERROR(w.Validate());
  const auto n = static_cast<int64_t>(w.size());
  ASSIGN_OR_RETURN(const int64_t p, PerQueryBudget(w.alpha(), w.beta(),
                                                   w.critical_count(),
                                                   rr_.epsilon()));
  ASSIGN_OR_RETURN(const int64_t total,
                   SamplesFor(w.alpha(), w.beta(), w.critical_count(), n));
  if (total > db_.remaining()) return Exhausted(total, db_.remaining());

  const auto block = static_cast<size_t>(p);
  member_.resize(block);
  draws_.resize(block);
  const double inv_p = 1.0 / static_cast<double>(p);
  std::vector<double> answers(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const EventSetView q = w.query(i);
    const std::span<const uint32_t> samples = *db_.Take(p);
    for (size_t j = 0; j < block; ++j) {
      const uint32_t x = samples[j];
      member_[j] = x < q.domain_size && q.Contains(x) ? 1 : 0;
    }
    for (uint64_t& d : draws_) d = noise_();
    const int64_t ones =
        kernels::RandomizedResponseTally(member_, draws_, rr_.flip_threshold());
    answers[i] = rr_.debias_scale() *
                 (static_cast<double>(ones) * inv_p - rr_.flip_probability());
  }
  ledger_.samples_consumed += total;
  ++ledger_.oracle_rounds;
  ledger_.queries_answered += n;
  return answers;
}

}  // namespace hsel
