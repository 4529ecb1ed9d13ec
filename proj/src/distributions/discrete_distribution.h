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

#ifndef HSEL_DISTRIBUTIONS_DISCRETE_DISTRIBUTION_H_
#define HSEL_DISTRIBUTIONS_DISCRETE_DISTRIBUTION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "distributions/event_set.h"

namespace hsel {

// Probability mass function over the finite domain {0, ..., N-1}. Immutable
// once constructed; weights are non-negative and sum to 1 within 1e-9.
class DiscreteDistribution {
 public:
  // Normalizes `raw_weights` by their sum. Fails on an empty vector, a
  // negative or non-finite entry, or a zero sum.
  static absl::StatusOr<DiscreteDistribution> Create(
      std::vector<double> raw_weights);

  size_t domain_size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  double operator[](size_t x) const { return weights_[x]; }

  bool operator==(const DiscreteDistribution& other) const = default;

 private:
  explicit DiscreteDistribution(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

// An ordered, non-empty list of distributions over one shared domain.
class HypothesisClass {
 public:
  static absl::StatusOr<HypothesisClass> Create(
      std::vector<DiscreteDistribution> members);

  size_t size() const { return members_.size(); }
  size_t domain_size() const { return members_.front().domain_size(); }
  const DiscreteDistribution& operator[](size_t i) const {
    return members_[i];
  }
  const std::vector<DiscreteDistribution>& members() const { return members_; }

 private:
  explicit HypothesisClass(std::vector<DiscreteDistribution> members)
      : members_(std::move(members)) {}

  std::vector<DiscreteDistribution> members_;
};

// Half the L1 distance between f and g.
absl::StatusOr<double> TvDistance(const DiscreteDistribution& f,
                                  const DiscreteDistribution& g);

// {x : f(x) > g(x)}, strict. Ties belong to neither Sch(f,g) nor Sch(g,f).
absl::StatusOr<EventSet> ScheffeSet(const DiscreteDistribution& f,
                                    const DiscreteDistribution& g);

// f[A], the probability mass of A under f.
absl::StatusOr<double> EventProbability(const DiscreteDistribution& f,
                                        EventSetView a);

struct ClassDistance {
  double distance = 0.0;
  size_t index = 0;
};

// Minimum TV distance from h to a member of the class, and the smallest index
// attaining it.
absl::StatusOr<ClassDistance> TvToClass(const DiscreteDistribution& h,
                                        const HypothesisClass& hypotheses);

}  // namespace hsel

#endif  // HSEL_DISTRIBUTIONS_DISCRETE_DISTRIBUTION_H_
