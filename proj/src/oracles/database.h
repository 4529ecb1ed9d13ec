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

#ifndef HSEL_ORACLES_DATABASE_H_
#define HSEL_ORACLES_DATABASE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "base/random.h"
#include "distributions/discrete_distribution.h"
#include "distributions/sampling.h"

namespace hsel {

// A bit-valued local randomizer applied to one raw sample.
using LocalRandomizer = std::function<uint8_t(uint32_t sample)>;

// One-pass store of i.i.d. samples with a read cursor. Samples are released
// strictly in order and each index is handed out at most once; a request that
// would run past the end yields NULL (std::nullopt) and leaves the cursor
// untouched.
//
// A database is either materialized from explicit samples or generated: a
// generated database of a given size draws its samples lazily, in order, from
// a seeded stream, which is observationally the same as a pre-drawn list.
class Database {
 public:
  static Database FromSamples(std::vector<uint32_t> samples);
  static Database Generated(const DiscreteDistribution& h, uint64_t seed,
                            int64_t size);

  int64_t size() const { return size_; }
  int64_t cursor() const { return cursor_; }
  int64_t remaining() const { return size_ - cursor_; }

  // The next n samples. The span stays valid until the next call.
  std::optional<std::span<const uint32_t>> Take(int64_t n);

  // The eps-LR oracle interface: applies randomizer i to sample cursor + i.
  std::optional<std::vector<uint8_t>> LrCall(
      std::span<const LocalRandomizer> randomizers);

  // Records every released index range and flags any overlap. Meant for
  // tests and accounting audits.
  void EnableReadTracking() { tracking_ = true; }
  bool read_tracking() const { return tracking_; }
  bool double_read_detected() const { return double_read_; }
  int64_t tracked_reads() const { return tracked_reads_; }

 private:
  Database() = default;
  void Track(int64_t begin, int64_t end);

  int64_t size_ = 0;
  int64_t cursor_ = 0;
  std::vector<uint32_t> samples_;             // materialized mode
  std::optional<AliasSampler> sampler_;       // generated mode
  Rng rng_;
  std::vector<uint32_t> buffer_;

  bool tracking_ = false;
  bool double_read_ = false;
  int64_t tracked_reads_ = 0;
  std::map<int64_t, int64_t> read_ranges_;  // begin -> end
};

}  // namespace hsel

#endif  // HSEL_ORACLES_DATABASE_H_
