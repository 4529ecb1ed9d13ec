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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels/simd_kernels.h"

namespace hsel::kernels {
namespace {

struct KernelTable {
  Isa isa;
  double (*abs_diff_sum)(std::span<const double>, std::span<const double>);
  double (*masked_sum)(std::span<const double>, std::span<const uint64_t>);
  void (*greater_mask)(std::span<const double>, std::span<const double>,
                       std::span<uint64_t>);
  int64_t (*rr_tally)(std::span<const uint8_t>, std::span<const uint64_t>,
                      uint64_t);
};

constexpr KernelTable kScalarTable = {
    Isa::kScalar, &scalar::AbsDiffSum, &scalar::MaskedSum,
    &scalar::GreaterMask, &scalar::RandomizedResponseTally};

#if HSEL_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table = {
    Isa::kAvx2, &avx2::AbsDiffSum, &avx2::MaskedSum, &avx2::GreaterMask,
    &avx2::RandomizedResponseTally};
#endif

const KernelTable* TableFor(Isa isa) {
#if HSEL_HAVE_AVX2_KERNELS
  if (isa == Isa::kAvx2 && Avx2Available()) return &kAvx2Table;
#endif
  return &kScalarTable;
}

// HSEL_FORCE_SCALAR=1 in the environment pins the reference kernels.
const KernelTable* InitialTable() {
  const char* force = std::getenv("HSEL_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0) return &kScalarTable;
  return TableFor(Isa::kAvx2);
}

std::atomic<const KernelTable*>& Active() {
  static std::atomic<const KernelTable*> table{InitialTable()};
  return table;
}

const KernelTable& Current() {
  return *Active().load(std::memory_order_relaxed);
}

}  // namespace

const char* IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool Avx2Available() {
#if HSEL_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa ActiveIsa() { return Current().isa; }

Isa SetActiveIsa(Isa isa) {
  const KernelTable* table = TableFor(isa);
  Active().store(table, std::memory_order_relaxed);
  return table->isa;
}

double AbsDiffSum(std::span<const double> a, std::span<const double> b) {
  return Current().abs_diff_sum(a, b);
}

double MaskedSum(std::span<const double> w, std::span<const uint64_t> mask) {
  return Current().masked_sum(w, mask);
}

void GreaterMask(std::span<const double> a, std::span<const double> b,
                 std::span<uint64_t> out) {
  Current().greater_mask(a, b, out);
}

int64_t RandomizedResponseTally(std::span<const uint8_t> member,
                                std::span<const uint64_t> draws,
                                uint64_t flip_threshold) {
  return Current().rr_tally(member, draws, flip_threshold);
}

}  // namespace hsel::kernels
