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

#include "oracles/database.h"

#include <utility>

namespace hsel {

Database Database::FromSamples(std::vector<uint32_t> samples) {
  Database db;
  db.size_ = static_cast<int64_t>(samples.size());
  db.samples_ = std::move(samples);
  return db;
}

Database Database::Generated(const DiscreteDistribution& h, uint64_t seed,
                             int64_t size) {
  Database db;
  db.size_ = size < 0 ? 0 : size;
  db.sampler_.emplace(h);
  db.rng_.seed(seed);
  return db;
}

std::optional<std::span<const uint32_t>> Database::Take(int64_t n) {
  if (n < 0 || n > remaining()) return std::nullopt;
  const int64_t begin = cursor_;
  cursor_ += n;
  if (tracking_) Track(begin, cursor_);
  if (!sampler_.has_value()) {
    return std::span<const uint32_t>(samples_.data() + begin,
                                     static_cast<size_t>(n));
  }
  buffer_.resize(static_cast<size_t>(n));
  for (uint32_t& x : buffer_) x = sampler_->Draw(rng_);
  return std::span<const uint32_t>(buffer_);
}

std::optional<std::vector<uint8_t>> Database::LrCall(
    std::span<const LocalRandomizer> randomizers) {
  const auto block = Take(static_cast<int64_t>(randomizers.size()));
  if (!block.has_value()) return std::nullopt;
  std::vector<uint8_t> outputs(randomizers.size());
  for (size_t i = 0; i < randomizers.size(); ++i) {
    outputs[i] = randomizers[i]((*block)[i]);
  }
  return outputs;
}

void Database::Track(int64_t begin, int64_t end) {
  if (begin == end) return;
  tracked_reads_ += end - begin;
  auto next = read_ranges_.lower_bound(begin);
  if (next != read_ranges_.end() && next->first < end) double_read_ = true;
  if (next != read_ranges_.begin() && std::prev(next)->second > begin) {
    double_read_ = true;
  }
  read_ranges_[begin] = end;
}

}  // namespace hsel
