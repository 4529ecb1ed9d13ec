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

#ifndef HSEL_ORACLES_WORKLOAD_H_
#define HSEL_ORACLES_WORKLOAD_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "distributions/discrete_distribution.h"
#include "distributions/event_set.h"

namespace hsel {

// One oracle submission: an ordered list of event-set queries plus the
// accuracy alpha, failure probability beta and the number m of critical
// queries. Queries are stored as rows of one packed bit matrix so that
// workloads with millions of Scheffé sets stay compact.
class Workload {
 public:
  Workload(size_t domain_size, double alpha, double beta,
           int64_t critical_count);

  size_t domain_size() const { return domain_size_; }
  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int64_t critical_count() const { return critical_count_; }
  void set_critical_count(int64_t m) { critical_count_ = m; }

  absl::Status AddQuery(EventSetView query);

  // Appends Sch(f, g) without materializing an EventSet. Both distributions
  // must live on this workload's domain.
  void AddScheffeSet(const DiscreteDistribution& f,
                     const DiscreteDistribution& g);

  EventSetView query(size_t i) const {
    return {domain_size_, std::span<const uint64_t>(
                              bits_.data() + i * words_per_row_,
                              words_per_row_)};
  }

  // 0 < alpha < 1, 0 < beta < 1 and 1 <= m <= n.
  absl::Status Validate() const;

 private:
  size_t domain_size_;
  size_t words_per_row_;
  double alpha_;
  double beta_;
  int64_t critical_count_;
  size_t size_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace hsel

#endif  // HSEL_ORACLES_WORKLOAD_H_
