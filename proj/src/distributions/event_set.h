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

#ifndef HSEL_DISTRIBUTIONS_EVENT_SET_H_
#define HSEL_DISTRIBUTIONS_EVENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace hsel {

// Non-owning view of a packed membership mask over a domain {0, ..., N-1}.
struct EventSetView {
  size_t domain_size = 0;
  std::span<const uint64_t> words;

  bool Contains(size_t x) const {
    return ((words[x >> 6] >> (x & 63)) & 1U) != 0;
  }
};

// A subset of a finite domain, stored as a packed bitset. Scheffé sets and
// oracle queries are event sets.
class EventSet {
 public:
  EventSet() = default;

  // The empty set over a domain of `domain_size` elements.
  explicit EventSet(size_t domain_size);

  static EventSet Full(size_t domain_size);
  static EventSet FromMask(const std::vector<bool>& mask);
  static absl::StatusOr<EventSet> FromIndices(size_t domain_size,
                                              std::span<const size_t> members);
  // Copies a packed mask; bits past `domain_size` are cleared.
  static EventSet FromView(EventSetView view);

  size_t domain_size() const { return domain_size_; }
  bool Contains(size_t x) const {
    return ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
  }
  void Insert(size_t x) { words_[x >> 6] |= uint64_t{1} << (x & 63); }

  size_t Count() const;
  bool empty() const { return Count() == 0; }
  std::vector<size_t> Members() const;
  bool IsDisjoint(const EventSet& other) const;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> mutable_words() { return words_; }

  EventSetView view() const { return {domain_size_, words_}; }
  operator EventSetView() const { return view(); }  // NOLINT

  bool operator==(const EventSet& other) const = default;

 private:
  size_t domain_size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace hsel

#endif  // HSEL_DISTRIBUTIONS_EVENT_SET_H_
