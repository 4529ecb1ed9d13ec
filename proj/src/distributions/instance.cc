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

#include "distributions/instance.h"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "base/random.h"
#include "base/status_macros.h"

namespace hsel {
namespace {

// Symmetric Dirichlet draw over `support` leading coordinates of a vector of
// length `domain_size`; coordinates past `offset + support` stay zero.
std::vector<double> DirichletWeights(size_t domain_size, size_t offset,
                                     double concentration, Rng& rng) {
  std::gamma_distribution<double> gamma(concentration, 1.0);
  std::vector<double> w(domain_size, 0.0);
  double sum = 0.0;
  for (size_t x = offset; x < domain_size; ++x) {
    w[x] = gamma(rng);
    sum += w[x];
  }
  if (!(sum > 0.0)) {
    // Every gamma draw underflowed (tiny concentration): fall back to the
    // point-mass limit of the Dirichlet.
    w[offset + UniformIndex(rng, domain_size - offset)] = 1.0;
  }
  return w;
}

absl::StatusOr<std::vector<DiscreteDistribution>> DrawMembers(
    const InstanceSpec& spec, size_t offset, Rng& rng) {
  std::vector<DiscreteDistribution> members;
  members.reserve(spec.k);
  for (int64_t i = 0; i < spec.k; ++i) {
    ASSIGN_OR_RETURN(
        DiscreteDistribution f,
        DiscreteDistribution::Create(DirichletWeights(
            spec.domain_size, offset, spec.concentration, rng)));
    members.push_back(std::move(f));
  }
  return members;
}

}  // namespace

const char* InstanceFamilyName(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::kPlanted:
      return "planted";
    case InstanceFamily::kPerturbed:
      return "perturbed";
    case InstanceFamily::kDirichlet:
      return "dirichlet";
  }
  return "unknown";
}

absl::StatusOr<InstanceFamily> ParseInstanceFamily(const std::string& name) {
  if (name == "planted") return InstanceFamily::kPlanted;
  if (name == "perturbed") return InstanceFamily::kPerturbed;
  if (name == "dirichlet") return InstanceFamily::kDirichlet;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown instance family '", name, "'"));
}

absl::Status ValidateInstanceSpec(const InstanceSpec& spec) {
  if (spec.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (spec.domain_size < 2) {
    return absl::InvalidArgumentError("domain size must be >= 2");
  }
  if (spec.domain_size > (int64_t{1} << 31)) {
    return absl::InvalidArgumentError("domain size must fit in 31 bits");
  }
  if (!(spec.delta >= 0.0 && spec.delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in [0, 1), got ", spec.delta));
  }
  if (!(spec.concentration > 0.0) || !std::isfinite(spec.concentration)) {
    return absl::InvalidArgumentError("concentration must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<Instance> GenerateInstance(const InstanceSpec& spec,
                                          uint64_t seed) {
  RETURN_IF_ERROR(ValidateInstanceSpec(spec));
  Rng rng(seed);
  const auto n = static_cast<size_t>(spec.domain_size);
  switch (spec.family) {
    case InstanceFamily::kPlanted: {
      ASSIGN_OR_RETURN(std::vector<DiscreteDistribution> members,
                       DrawMembers(spec, 0, rng));
      const size_t j = UniformIndex(rng, members.size());
      DiscreteDistribution target = members[j];
      ASSIGN_OR_RETURN(HypothesisClass hypotheses,
                       HypothesisClass::Create(std::move(members)));
      return Instance{std::move(hypotheses), std::move(target), j};
    }
    case InstanceFamily::kPerturbed: {
      ASSIGN_OR_RETURN(std::vector<DiscreteDistribution> members,
                       DrawMembers(spec, 1, rng));
      const size_t j = UniformIndex(rng, members.size());
      std::vector<double> w(n);
      for (size_t x = 1; x < n; ++x) w[x] = (1.0 - spec.delta) * members[j][x];
      w[0] = spec.delta;
      ASSIGN_OR_RETURN(DiscreteDistribution target,
                       DiscreteDistribution::Create(std::move(w)));
      ASSIGN_OR_RETURN(HypothesisClass hypotheses,
                       HypothesisClass::Create(std::move(members)));
      return Instance{std::move(hypotheses), std::move(target), j};
    }
    case InstanceFamily::kDirichlet: {
      ASSIGN_OR_RETURN(std::vector<DiscreteDistribution> members,
                       DrawMembers(spec, 0, rng));
      ASSIGN_OR_RETURN(DiscreteDistribution target,
                       DiscreteDistribution::Create(DirichletWeights(
                           n, 0, spec.concentration, rng)));
      ASSIGN_OR_RETURN(HypothesisClass hypotheses,
                       HypothesisClass::Create(std::move(members)));
      return Instance{std::move(hypotheses), std::move(target), std::nullopt};
    }
  }
  return absl::InternalError("unhandled instance family");
}

nlohmann::json InstanceSpecToJson(const InstanceSpec& spec) {
  return {{"family", InstanceFamilyName(spec.family)},
          {"k", spec.k},
          {"domain_size", spec.domain_size},
          {"delta", spec.delta},
          {"concentration", spec.concentration}};
}

absl::StatusOr<InstanceSpec> InstanceSpecFromJson(const nlohmann::json& json) {
  if (!json.is_object()) {
    return absl::InvalidArgumentError("instance spec must be a JSON object");
  }
  InstanceSpec spec;
  try {
    ASSIGN_OR_RETURN(spec.family, ParseInstanceFamily(json.at("family").get<std::string>()));
    spec.k = json.at("k").get<int64_t>();
    spec.domain_size = json.at("domain_size").get<int64_t>();
    spec.delta = json.value("delta", 0.0);
    spec.concentration = json.value("concentration", 1.0);
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed instance spec: ", e.what()));
  }
  RETURN_IF_ERROR(ValidateInstanceSpec(spec));
  return spec;
}

nlohmann::json DistributionToJson(const DiscreteDistribution& f) {
  return nlohmann::json(std::vector<double>(f.weights().begin(),
                                            f.weights().end()));
}

absl::StatusOr<DiscreteDistribution> DistributionFromJson(
    const nlohmann::json& json) {
  if (!json.is_array()) {
    return absl::InvalidArgumentError("distribution must be a weight array");
  }
  std::vector<double> w;
  try {
    w = json.get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed weight array: ", e.what()));
  }
  return DiscreteDistribution::Create(std::move(w));
}

}  // namespace hsel
