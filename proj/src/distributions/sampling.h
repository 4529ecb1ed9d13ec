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

#ifndef HSEL_DISTRIBUTIONS_SAMPLING_H_
#define HSEL_DISTRIBUTIONS_SAMPLING_H_

#include <cstdint>
#include <vector>

#include "base/random.h"
#include "distributions/discrete_distribution.h"

namespace hsel {

// Walker/Vose alias table: O(N) setup, one 64-bit draw per sample. The high
// part of draw * N selects the column and the low 64 bits of the product act
// as the uniform for the accept test.
class AliasSampler {
 public:
  explicit AliasSampler(const DiscreteDistribution& f);

  uint32_t Draw(Rng& rng) const {
    const auto product =
        static_cast<unsigned __int128>(rng()) * columns_.size();
    const auto column = static_cast<size_t>(product >> 64);
    const auto fraction = static_cast<uint64_t>(product);
    const Column& c = columns_[column];
    return fraction < c.accept ? static_cast<uint32_t>(column) : c.alias;
  }

  size_t domain_size() const { return columns_.size(); }

 private:
  struct Column {
    uint64_t accept;  // P(keep column) scaled to 2^64
    uint32_t alias;
  };
  std::vector<Column> columns_;
};

// n i.i.d. draws from f, reproducible from `seed`.
std::vector<uint32_t> Sample(const DiscreteDistribution& f, uint64_t seed,
                             size_t n);

}  // namespace hsel

#endif  // HSEL_DISTRIBUTIONS_SAMPLING_H_
