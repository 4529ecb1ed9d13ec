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

// Scheffé tests and the single-round tournaments built from them.

#ifndef HSEL_SELECTORS_TOURNAMENT_H_
#define HSEL_SELECTORS_TOURNAMENT_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "base/random.h"
#include "distributions/discrete_distribution.h"
#include "oracles/sq_oracle.h"
#include "selectors/selection_outcome.h"

namespace hsel {

enum class ScheffeWinner { kFirst = 1, kSecond = 2 };

// Decides between f1 and f2 given y, an estimate of h[Sch(f1, f2)]: f1 wins
// iff |f1[B] - y| <= |f2[B] - y|. Both must share a domain.
ScheffeWinner ScheffeTest(const DiscreteDistribution& f1,
                          const DiscreteDistribution& f2, double y);

inline ScheffeWinner ScheffeDecision(double f1_mass, double f2_mass,
                                     double y) {
  return std::abs(f1_mass - y) <= std::abs(f2_mass - y) ? ScheffeWinner::kFirst
                                                        : ScheffeWinner::kSecond;
}

// A queued Scheffé comparison between two class members. The query for the
// pair is B = Sch(first, second); the masses are first[B] and second[B].
// Slots are the members' positions within their group or candidate list.
struct PairTest {
  size_t first;
  size_t second;
  double first_mass;
  double second_mass;
  size_t group = 0;
  size_t first_slot = 0;
  size_t second_slot = 0;
};

// Appends Sch(F[first], F[second]) to the workload and returns the test.
PairTest AppendPairTest(Workload& workload, const HypothesisClass& hypotheses,
                        size_t first, size_t second);

// Appends every pair (a before b) of each group. Group ids are
// `group_offset + position in groups`.
void AppendRoundRobinTests(Workload& workload,
                           const HypothesisClass& hypotheses,
                           const std::vector<std::vector<size_t>>& groups,
                           size_t group_offset, std::vector<PairTest>& tests);

// Per-group winner: the member with most wins, earliest in its group on a tie.
// `answers[i]` answers `tests[i]`; only tests whose group lies in
// [group_offset, group_offset + groups.size()) are read.
std::vector<size_t> ResolveRoundRobinWinners(
    const std::vector<std::vector<size_t>>& groups, size_t group_offset,
    std::span<const PairTest> tests, std::span<const double> answers);

// Random partition of `candidates` into consecutive groups of size eta (the
// last one may be smaller).
std::vector<std::vector<size_t>> RandomPartition(std::vector<size_t> candidates,
                                                 int64_t eta, Rng& rng);

// Round-robin over the listed candidates in one oracle round with m equal to
// the number of pairs. Returns the winning class index.
absl::StatusOr<size_t> RoundRobinOver(const HypothesisClass& hypotheses,
                                      std::span<const size_t> candidates,
                                      OracleSession& session, double alpha,
                                      double beta, std::string_view stage);

// MDE-variant over the listed candidates in one oracle round: queries
// Sch(f_i, f_j) once per unordered pair, scores each candidate by its largest
// residual |f[B] - y| over the pairs it is in, and returns the minimizer
// (earliest in `candidates` on a tie).
absl::StatusOr<size_t> MdeVariantOver(const HypothesisClass& hypotheses,
                                      std::span<const size_t> candidates,
                                      OracleSession& session, double alpha,
                                      double beta, std::string_view stage);

absl::StatusOr<SelectionOutcome> RoundRobin(const HypothesisClass& hypotheses,
                                            StatisticalQueryOracle& oracle,
                                            double alpha, double beta);

absl::StatusOr<SelectionOutcome> MdeVariant(const HypothesisClass& hypotheses,
                                            StatisticalQueryOracle& oracle,
                                            double alpha, double beta);

// One multi-round-robin pass as its own oracle round: random groups of size
// eta, a round-robin in each, and the group winners in group order.
absl::StatusOr<std::vector<size_t>> MultiRoundRobin(
    const HypothesisClass& hypotheses, std::span<const size_t> candidates,
    StatisticalQueryOracle& oracle, double alpha, double beta, int64_t eta,
    Rng& rng);

}  // namespace hsel

#endif  // HSEL_SELECTORS_TOURNAMENT_H_
