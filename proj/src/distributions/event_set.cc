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

#include "distributions/event_set.h"

#include <bit>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kernels/simd_kernels.h"

namespace hsel {

EventSet::EventSet(size_t domain_size)
    : domain_size_(domain_size),
      words_(kernels::WordsForBits(domain_size), 0) {}

EventSet EventSet::Full(size_t domain_size) {
  EventSet set(domain_size);
  for (size_t x = 0; x < domain_size; ++x) set.Insert(x);
  return set;
}

EventSet EventSet::FromMask(const std::vector<bool>& mask) {
  EventSet set(mask.size());
  for (size_t x = 0; x < mask.size(); ++x) {
    if (mask[x]) set.Insert(x);
  }
  return set;
}

absl::StatusOr<EventSet> EventSet::FromIndices(
    size_t domain_size, std::span<const size_t> members) {
  EventSet set(domain_size);
  for (size_t x : members) {
    if (x >= domain_size) {
      return absl::InvalidArgumentError(absl::StrCat(
          "event member ", x, " outside domain of size ", domain_size));
    }
    set.Insert(x);
  }
  return set;
}

EventSet EventSet::FromView(EventSetView view) {
  EventSet set(view.domain_size);
  for (size_t i = 0; i < set.words_.size(); ++i) set.words_[i] = view.words[i];
  if (const size_t tail = view.domain_size & 63; tail != 0) {
    set.words_.back() &= (uint64_t{1} << tail) - 1;
  }
  return set;
}

size_t EventSet::Count() const {
  size_t count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

std::vector<size_t> EventSet::Members() const {
  std::vector<size_t> members;
  for (size_t x = 0; x < domain_size_; ++x) {
    if (Contains(x)) members.push_back(x);
  }
  return members;
}

bool EventSet::IsDisjoint(const EventSet& other) const {
  const size_t n = std::min(words_.size(), other.words_.size());
  for (size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return false;
  }
  return true;
}

}  // namespace hsel
