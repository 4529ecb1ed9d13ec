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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
//   acceptance_test              run all criteria
//   acceptance_test N [M ...]    run the listed criteria only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "absl/strings/str_format.h"
#include "base/random.h"
#include "distributions/discrete_distribution.h"
#include "distributions/instance.h"
#include "harness/experiment.h"
#include "oracles/database.h"
#include "oracles/randomized_response.h"
#include "oracles/sq_oracle.h"
#include "oracles/workload.h"
#include "selectors/bokserr.h"
#include "selectors/bokserr_params.h"
#include "selectors/boosted_knockout.h"
#include "selectors/boosted_srr.h"
#include "selectors/budget.h"
#include "selectors/tournament.h"

namespace hsel {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

double McSlack(double beta, int trials) {
  return beta + 3.0 * std::sqrt(beta * (1.0 - beta) / trials);
}

// Criteria 1 and 2: exhaustive TV check of a one-round selector on random
// Dirichlet instances with the exact oracle.
Verdict FactorCheck(SelectorKind selector, double factor) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(0x5eed0001);
  int violations = 0;
  double worst = 0.0;
  const int instances = 500;
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec;
    spec.family = InstanceFamily::kDirichlet;
    spec.k = 1 + static_cast<int64_t>(UniformIndex(rng, 8));
    spec.domain_size = 2 + static_cast<int64_t>(UniformIndex(rng, 9));
    const Instance inst = *GenerateInstance(spec, rng());
    ExactOracle oracle(inst.target);
    const SelectionOutcome out =
        selector == SelectorKind::kMdeVariant
            ? *MdeVariant(inst.hypotheses, oracle, 0.1, 0.1)
            : *RoundRobin(inst.hypotheses, oracle, 0.1, 0.1);
    double opt = 1.0;
    for (size_t j = 0; j < inst.hypotheses.size(); ++j) {
      double s = 0.0;
      for (size_t x = 0; x < inst.target.domain_size(); ++x) {
        s += std::abs(inst.target[x] - inst.hypotheses[j][x]);
      }
      opt = std::min(opt, 0.5 * s);
    }
    const double err = *TvDistance(inst.target, inst.hypotheses[out.chosen_index]);
    if (err > factor * opt + 1e-12) ++violations;
    if (opt > 0) worst = std::max(worst, err / opt);
  }
  const double secs = Seconds(start);
  return {violations == 0 && secs < 10.0,
          absl::StrFormat("%d/%d instances violate d_TV <= %.0f*opt; worst "
                          "ratio %.3f; %.2f s (limit 10 s)",
                          violations, instances, factor, worst, secs)};
}

Verdict Criterion1() { return FactorCheck(SelectorKind::kMdeVariant, 3.0); }
Verdict Criterion2() { return FactorCheck(SelectorKind::kRoundRobin, 9.0); }

Verdict Criterion3() {
  bool ok = true;
  std::string detail;
  for (double eps : {0.1, 1.0, 5.0}) {
    const RandomizedResponse rr = *RandomizedResponse::Create(eps);
    double worst = 0.0;
    for (uint8_t b : {0, 1}) {
      const double ratio =
          rr.OutputProbability(b, b) /
          rr.OutputProbability(b, static_cast<uint8_t>(1 - b));
      worst = std::max(worst, std::abs(ratio - std::exp(eps)));
    }
    ok &= worst <= 1e-12;
    detail += absl::StrFormat("eps=%g |ratio-e^eps|=%.2e; ", eps, worst);
  }
  return {ok, detail};
}

Verdict Criterion4() {
  const auto start = std::chrono::steady_clock::now();
  const double eps = 1.0, alpha = 0.1, beta = 0.1;
  const int64_t m = 5;
  const int trials = 2000;
  const size_t domain = 12;
  Rng setup(0x5eed0004);
  std::vector<double> w(domain);
  for (double& x : w) x = 0.2 + UniformUnit(setup);
  const DiscreteDistribution h = *DiscreteDistribution::Create(w);
  Workload workload(domain, alpha, beta, m);
  std::vector<double> truth;
  for (int q = 0; q < 20; ++q) {
    EventSet set(domain);
    for (size_t x = 0; x < domain; ++x) {
      if (UniformUnit(setup) < 0.5) set.Insert(x);
    }
    truth.push_back(*EventProbability(h, set));
    (void)workload.AddQuery(set);
  }
  const std::vector<size_t> subset = {0, 4, 9, 14, 19};
  const int64_t per = *PerQueryBudget(alpha, beta, m, eps);
  int exceed = 0;
  for (int t = 0; t < trials; ++t) {
    const uint64_t seed = DeriveSeed(0x5eed0004 + t, SeedStream::kDatabase);
    RandomizedResponseOracle oracle(Database::Generated(h, seed, 20 * per),
                                    *RandomizedResponse::Create(eps),
                                    DeriveSeed(seed, SeedStream::kOracleNoise));
    const std::vector<double> answers = *oracle.Answer(workload);
    double worst = 0.0;
    for (size_t q : subset) worst = std::max(worst, std::abs(answers[q] - truth[q]));
    if (worst > alpha) ++exceed;
  }
  const double rate = static_cast<double>(exceed) / trials;
  const double limit = McSlack(beta, trials);
  const double secs = Seconds(start);
  return {rate <= limit && secs < 60.0,
          absl::StrFormat("fixed 5-subset max error > alpha in %d/%d trials "
                          "(%.4f <= %.4f); p=%d per query; %.2f s (limit 60 s)",
                          exceed, trials, rate, limit, per, secs)};
}

Verdict Criterion5() {
  const double eps = 1.0, beta = 0.1;
  const double c = 1.0 / std::tanh(eps / 2);
  // Accuracy whose per-query budget is exactly 10^4 samples.
  const double alpha = std::sqrt(c * c * std::log(2.0 / beta) / (2.0 * 9999.5));
  const int64_t p = *PerQueryBudget(alpha, beta, 1, eps);
  const DiscreteDistribution h = *DiscreteDistribution::Create({0.3, 0.7});
  Workload w(2, alpha, beta, 1);
  EventSet zero(2);
  zero.Insert(0);
  (void)w.AddQuery(zero);
  const int reps = 1000;
  RandomizedResponseOracle oracle(Database::Generated(h, 0x5eed0005, p * reps),
                                  *RandomizedResponse::Create(eps), 0x5eed0006);
  double sum = 0.0;
  for (int i = 0; i < reps; ++i) sum += oracle.Answer(w)->front();
  const double mean = sum / reps;
  return {p == 10000 && std::abs(mean - 0.3) <= 0.02,
          absl::StrFormat("p=%d, mean of %d answers %.5f (|mean-0.3|=%.5f <= "
                          "0.02)",
                          p, reps, mean, std::abs(mean - 0.3))};
}

struct BoundCheck {
  int64_t knockout_rounds = 0;
  int64_t srr_rounds = 0;
  int64_t violations = 0;
};

void CheckKnockout(const StageLists& lists, int64_t k, BoundCheck& check) {
  for (size_t i = 0; i < lists.round_sizes.size(); ++i) {
    ++check.knockout_rounds;
    // k_i <= k / (3/2)^i  <=>  k_i * 3^i <= k * 2^i, in exact integers.
    __int128 lhs = lists.round_sizes[i], rhs = k;
    for (size_t j = 0; j <= i; ++j) {
      lhs *= 3;
      rhs *= 2;
    }
    if (lhs > rhs) ++check.violations;
  }
}

void CheckSrr(const StageLists& lists, int64_t k, int64_t log_inv_beta,
              int64_t eta, BoundCheck& check) {
  for (size_t i = 0; i < lists.round_sizes.size(); ++i) {
    ++check.srr_rounds;
    // n_i <= max(1, k L^i / eta^(2^i - 1)), in exact integers.
    const int64_t round = static_cast<int64_t>(i + 1);
    __int128 lhs = lists.round_sizes[i], rhs = k;
    for (int64_t j = 0; j < round; ++j) rhs *= log_inv_beta;
    for (int64_t j = 0; j < (int64_t{1} << round) - 1; ++j) lhs *= eta;
    if (lists.round_sizes[i] > 1 && lhs > rhs) ++check.violations;
  }
}

Verdict Criterion6() {
  const double beta = 3.0 / 16;
  const double stage_beta = beta * kBetaShare;  // 1/16, log(1/beta') = 4
  bool ladder_ok = true;
  std::string detail;
  BoundCheck check;
  for (int64_t k : {int64_t{1} << 4, int64_t{1} << 8, int64_t{1} << 16}) {
    const BokserrParams p = *MakeBokserrParams(k, beta, ParameterMode::kTheory);
    const int64_t ll_k = LogLogCeil(static_cast<double>(k));
    const int64_t ll_b = LogLogCeil(3.0 / beta);
    const int64_t total = p.t1_unclamped + p.t2 + 1;
    ladder_ok &= total == (6 + 4 * ll_b) * ll_k;
    detail += absl::StrFormat("k=2^%d: t1+t2+1=%d (clamped t1=%d); ",
                              static_cast<int>(std::log2(k)), total, p.t1);

    const Instance inst = *GenerateInstance(
        {InstanceFamily::kDirichlet, k, k > 256 ? 4 : 16, 0.0},
        static_cast<uint64_t>(k));
    std::vector<size_t> all(static_cast<size_t>(k));
    std::iota(all.begin(), all.end(), size_t{0});
    const int runs = k > 256 ? 1 : 10;
    for (int run = 0; run < runs; ++run) {
      ExactOracle oracle(inst.target);
      Rng rng(static_cast<uint64_t>(run));
      if (k <= 256) {
        // Full pipeline; lists carry the stage survivors.
        OracleSession session(oracle);
        const StageLists ko = *BoostedKnockoutOver(
            inst.hypotheses, all, session, 0.1 * kStageAlphaShare, stage_beta,
            p.t1, p.multipliers, rng);
        CheckKnockout(ko, k, check);
        const StageLists srr = *BoostedSrrOver(
            inst.hypotheses, ko.survivors, session, 0.1 * kStageAlphaShare,
            stage_beta, p.eta, p.t2, p.multipliers, rng);
        CheckSrr(srr, static_cast<int64_t>(ko.survivors.size()), 4, p.eta,
                 check);
      } else {
        // Knockout rounds until at most one survivor; SRR run on the whole
        // class so its rounds are exercised at this size.
        OracleSession session(oracle);
        const StageLists ko = *BoostedKnockoutOver(
            inst.hypotheses, all, session, 0.1 * kStageAlphaShare, stage_beta,
            p.t1, p.multipliers, rng);
        CheckKnockout(ko, k, check);
      }
      OracleSession session(oracle);
      const StageLists srr = *BoostedSrrOver(
          inst.hypotheses, all, session, 0.1 * kStageAlphaShare, stage_beta,
          p.eta, p.t2, p.multipliers, rng);
      CheckSrr(srr, k, 4, p.eta, check);
    }
  }
  detail += absl::StrFormat("%d knockout and %d SRR rounds checked, %d bound "
                            "violations",
                            check.knockout_rounds, check.srr_rounds,
                            check.violations);
  return {ladder_ok && check.violations == 0 && check.knockout_rounds > 0 &&
              check.srr_rounds > 0,
          detail};
}

struct AccountingTally {
  int64_t runs = 0;
  int64_t mismatches = 0;
  int64_t double_reads = 0;

  void Add(const TrialRecord& r) {
    if (r.budget_exhausted) return;
    ++runs;
    if (r.samples_consumed != r.accounted_samples) ++mismatches;
    if (r.double_read) ++double_reads;
  }
};

AccountingTally& Accounting() {
  static AccountingTally tally;
  return tally;
}

Verdict Criterion7() {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig c;
  c.instance = {InstanceFamily::kPlanted, 128, 64, 0.0};
  c.selector = SelectorKind::kBokserr;
  c.oracle = OracleKind::kRandomizedResponse;
  c.epsilon = 1.0;
  c.alpha = 0.2;
  c.beta = 0.1;
  c.trials = 200;
  c.base_seed = 7000;
  c.mode = ParameterMode::kPractical;
  c.multipliers = {0.25, 0.25, 0.25, 0.25};
  c.track_reads = true;
  const ExperimentSummary s = *RunExperiment(c);
  int failures = 0;
  int64_t over_budget = 0;
  for (const TrialRecord& r : s.records) {
    if (!(r.tv_error <= c.alpha)) ++failures;
    if (r.samples_consumed > s.budget_estimate) ++over_budget;
    Accounting().Add(r);
  }
  const double rate = static_cast<double>(failures) / c.trials;
  const double limit = McSlack(c.beta, static_cast<int>(c.trials));
  return {rate <= limit && over_budget == 0,
          absl::StrFormat("failure rate %d/%d = %.4f <= %.4f; mean samples "
                          "%.3g <= budget %d; %.1f s",
                          failures, static_cast<int>(c.trials), rate, limit,
                          s.mean_samples, s.budget_estimate, Seconds(start))};
}

Verdict Criterion8() {
  const double alpha = 0.1, beta = 0.1, eps = 1.0;
  std::vector<double> normalized;
  std::string detail = "theory mode, alpha=0.1 beta=0.1 eps=1: budget/k =";
  int64_t bokserr_1024 = 0;
  for (int64_t k : {int64_t{1} << 6, int64_t{1} << 8, int64_t{1} << 10,
                    int64_t{1} << 12}) {
    const BokserrParams p = *MakeBokserrParams(k, beta, ParameterMode::kTheory);
    const int64_t total = BudgetEstimate(k, alpha, beta, eps, p)->total_samples;
    if (k == 1024) bokserr_1024 = total;
    normalized.push_back(static_cast<double>(total) / k);
    detail += absl::StrFormat(" %.4g", normalized.back());
  }
  const auto [lo, hi] = std::minmax_element(normalized.begin(), normalized.end());
  const double spread = *hi / *lo;
  const bool linear = spread <= 3.0;
  const int64_t rr_1024 =
      AllPairsBudget(1024, alpha, beta, "round_robin",
                     RandomizedResponseCost(eps))
          ->total_samples;
  const double gap = static_cast<double>(rr_1024) / bokserr_1024;
  const bool dominates = gap > 50.0;
  detail += absl::StrFormat(
      "; max/min %.3f (<= 3: %s); round-robin/bokserr at k=2^10 = %.4g/%.4g = "
      "%.4f (> 50: %s)",
      spread, linear ? "yes" : "no", static_cast<double>(rr_1024),
      static_cast<double>(bokserr_1024), gap, dominates ? "yes" : "no");
  return {linear && dominates, detail};
}

Verdict Criterion9() {
  const auto start = std::chrono::steady_clock::now();
  for (SelectorKind s : {SelectorKind::kBokserr, SelectorKind::kRoundRobin,
                         SelectorKind::kMdeVariant, SelectorKind::kKnockoutOnly,
                         SelectorKind::kSrrOnly}) {
    for (OracleKind o : {OracleKind::kEmpirical, OracleKind::kRandomizedResponse}) {
      for (InstanceFamily f : {InstanceFamily::kPlanted,
                               InstanceFamily::kPerturbed,
                               InstanceFamily::kDirichlet}) {
        ExperimentConfig c;
        c.instance = {f, 24, 16, 0.05};
        c.selector = s;
        c.oracle = o;
        c.alpha = 0.3;
        c.beta = 0.2;
        c.trials = 4;
        c.base_seed = 9000;
        c.track_reads = true;
        for (const TrialRecord& r : RunExperiment(c)->records) {
          Accounting().Add(r);
        }
      }
    }
  }
  const AccountingTally& t = Accounting();
  return {t.runs > 0 && t.mismatches == 0 && t.double_reads == 0,
          absl::StrFormat("%d runs: %d ledger/log mismatches, %d double reads; "
                          "%.1f s",
                          t.runs, t.mismatches, t.double_reads, Seconds(start))};
}

Verdict Criterion10() {
  Rng rng(0x5eed0010);
  int64_t calls = 0, nulls = 0, mismatches = 0;
  const LocalRandomizer parity = [](uint32_t x) {
    return static_cast<uint8_t>(x & 1);
  };
  for (int seq = 0; seq < 2000; ++seq) {
    const int64_t size = static_cast<int64_t>(UniformIndex(rng, 40));
    std::vector<uint32_t> samples(static_cast<size_t>(size));
    for (uint32_t& x : samples) x = static_cast<uint32_t>(rng());
    Database db = Database::FromSamples(samples);
    int64_t cursor = 0;  // reference model
    for (int step = 0; step < 12; ++step) {
      const int64_t n = static_cast<int64_t>(UniformIndex(rng, 12));
      ++calls;
      const auto out =
          db.LrCall(std::vector<LocalRandomizer>(static_cast<size_t>(n), parity));
      const bool expect_null = n + cursor > size;
      if (expect_null) ++nulls;
      if (out.has_value() == expect_null) {
        ++mismatches;
        continue;
      }
      if (out.has_value()) {
        for (int64_t i = 0; i < n; ++i) {
          if ((*out)[i] != (samples[cursor + i] & 1)) ++mismatches;
        }
        cursor += n;
      }
      if (db.cursor() != cursor) ++mismatches;
    }
  }
  return {mismatches == 0 && nulls > 0,
          absl::StrFormat("%d calls (%d NULL) against the reference cursor "
                          "model, %d mismatches",
                          calls, nulls, mismatches)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace hsel

int main(int argc, char** argv) {
  using hsel::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "MDE-variant 3-factor with exact oracle", hsel::Criterion1},
      {2, "round-robin 9-factor with exact oracle", hsel::Criterion2},
      {3, "randomized response likelihood ratio", hsel::Criterion3},
      {4, "critical-query oracle calibration", hsel::Criterion4},
      {5, "randomized response unbiasedness", hsel::Criterion5},
      {6, "round and list-size bookkeeping", hsel::Criterion6},
      {7, "end-to-end accuracy at desk scale", hsel::Criterion7},
      {8, "linear-in-k budget", hsel::Criterion8},
      {9, "accounting exactness", hsel::Criterion9},
      {10, "local randomizer oracle semantics", hsel::Criterion10},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const hsel::Verdict v = c.run();
    std::printf("criterion %2d %s: %s: %s\n", c.id, v.pass ? "PASS" : "FAIL",
                c.name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
