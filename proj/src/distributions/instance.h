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

#ifndef HSEL_DISTRIBUTIONS_INSTANCE_H_
#define HSEL_DISTRIBUTIONS_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "distributions/discrete_distribution.h"
#include "json.hpp"

namespace hsel {

// Synthetic selection problems.
//   kPlanted:   h is a copy of a uniformly chosen member, so opt = 0.
//   kPerturbed: members carry no mass on element 0 and
//               h = (1 - delta) f_j + delta * e_0, which puts every member at
//               TV distance >= delta from h with equality at f_j.
//   kDirichlet: members and h are independent Dirichlet draws.
enum class InstanceFamily { kPlanted, kPerturbed, kDirichlet };

const char* InstanceFamilyName(InstanceFamily family);
absl::StatusOr<InstanceFamily> ParseInstanceFamily(const std::string& name);

struct InstanceSpec {
  InstanceFamily family = InstanceFamily::kPlanted;
  int64_t k = 2;
  int64_t domain_size = 2;
  double delta = 0.0;
  // Symmetric Dirichlet concentration for randomly drawn members.
  double concentration = 1.0;
};

absl::Status ValidateInstanceSpec(const InstanceSpec& spec);

struct Instance {
  HypothesisClass hypotheses;
  DiscreteDistribution target;
  // Index of the member h was built from, for planted and perturbed.
  std::optional<size_t> planted_index;
};

absl::StatusOr<Instance> GenerateInstance(const InstanceSpec& spec,
                                          uint64_t seed);

nlohmann::json InstanceSpecToJson(const InstanceSpec& spec);
absl::StatusOr<InstanceSpec> InstanceSpecFromJson(const nlohmann::json& json);

nlohmann::json DistributionToJson(const DiscreteDistribution& f);
absl::StatusOr<DiscreteDistribution> DistributionFromJson(
    const nlohmann::json& json);

}  // namespace hsel

#endif  // HSEL_DISTRIBUTIONS_INSTANCE_H_
