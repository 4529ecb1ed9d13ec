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

#include "distributions/sampling.h"

#include <cmath>
#include <limits>

namespace hsel {
namespace {

uint64_t ScaleToWord(double p) {
  if (p >= 1.0) return std::numeric_limits<uint64_t>::max();
  if (p <= 0.0) return 0;
  return static_cast<uint64_t>(std::ldexp(p, 64));
}

}  // namespace

AliasSampler::AliasSampler(const DiscreteDistribution& f)
    : columns_(f.domain_size()) {
  const size_t n = f.domain_size();
  std::vector<double> scaled(n);
  std::vector<uint32_t> small;
  std::vector<uint32_t> large;
  for (size_t x = 0; x < n; ++x) {
    scaled[x] = f[x] * static_cast<double>(n);
    columns_[x].alias = static_cast<uint32_t>(x);
    (scaled[x] < 1.0 ? small : large).push_back(static_cast<uint32_t>(x));
  }
  while (!small.empty() && !large.empty()) {
    const uint32_t s = small.back();
    small.pop_back();
    const uint32_t l = large.back();
    columns_[s].accept = ScaleToWord(scaled[s]);
    columns_[s].alias = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding; they keep themselves.
  for (uint32_t x : large) columns_[x] = {ScaleToWord(1.0), x};
  for (uint32_t x : small) columns_[x] = {ScaleToWord(1.0), x};
}

std::vector<uint32_t> Sample(const DiscreteDistribution& f, uint64_t seed,
                             size_t n) {
  const AliasSampler sampler(f);
  Rng rng(seed);
  std::vector<uint32_t> out(n);
  for (uint32_t& x : out) x = sampler.Draw(rng);
  return out;
}

}  // namespace hsel
