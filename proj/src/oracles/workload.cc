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

#include "oracles/workload.h"

#include "absl/strings/str_cat.h"
#include "kernels/simd_kernels.h"

namespace hsel {

Workload::Workload(size_t domain_size, double alpha, double beta,
                   int64_t critical_count)
    : domain_size_(domain_size),
      words_per_row_(kernels::WordsForBits(domain_size)),
      alpha_(alpha),
      beta_(beta),
      critical_count_(critical_count) {}

absl::Status Workload::AddQuery(EventSetView query) {
  if (query.domain_size != domain_size_) {
    return absl::InvalidArgumentError(
        absl::StrCat("query over domain ", query.domain_size,
                     " submitted to workload over domain ", domain_size_));
  }
  bits_.insert(bits_.end(), query.words.begin(), query.words.end());
  ++size_;
  return absl::OkStatus();
}

void Workload::AddScheffeSet(const DiscreteDistribution& f,
                             const DiscreteDistribution& g) {
  bits_.resize(bits_.size() + words_per_row_);
  kernels::GreaterMask(
      f.weights(), g.weights(),
      std::span<uint64_t>(bits_.data() + size_ * words_per_row_,
                          words_per_row_));
  ++size_;
}

absl::Status Workload::Validate() const {
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must lie in (0, 1), got ", alpha_));
  }
  if (!(beta_ > 0.0 && beta_ < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in (0, 1), got ", beta_));
  }
  if (size_ == 0) return absl::InvalidArgumentError("empty workload");
  if (critical_count_ < 1 || critical_count_ > static_cast<int64_t>(size_)) {
    return absl::InvalidArgumentError(
        absl::StrCat("critical count ", critical_count_,
                     " outside [1, ", size_, "]"));
  }
  return absl::OkStatus();
}

}  // namespace hsel
