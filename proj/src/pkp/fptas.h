// Copyright 2026 The pkp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Approximation scheme for the product knapsack problem.
//
// Profits move to log space and are scaled to integers,
//
//     scaled_j = floor(log2|p_j| / K),   K = eps / n^2,
//
// and a dynamic program by scaled profit keeps, for every profit sum, the
// minimum weight of a subset with an even (resp. odd) number of negative
// items. The answer is the largest profit sum whose even-parity weight fits.
// Its product is at least (1 - eps) times the optimum; the table has
// n * max_j(scaled_j) + 1 entries per parity.

#ifndef PKP_FPTAS_H_
#define PKP_FPTAS_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "pkp/core.h"
#include "pkp/numerics.h"

namespace pkp {

struct ScaledInstance {
  const Instance* base = nullptr;
  // K = eps / n^2, exact.
  Rational k{1};
  std::vector<std::uint64_t> scaled_profits;
  std::uint64_t scaled_max = 0;
};

// Throws Error(kEpsOutOfRange) unless 0 < eps < 1, Error(kEmptyInstance) for
// n == 0 and Error(kNotPreprocessed). `instance` must outlive the result.
ScaledInstance ScaleProfits(const Instance& instance, const Rational& eps);

// n * scaled_max + 1.
std::uint64_t DpTableSize(std::uint64_t n, std::uint64_t scaled_max);

// Minimum-weight tables over scaled profit sums, one per parity, with the
// per-item decisions needed to rebuild any cell's subset.
class ParityDpTables {
 public:
  static constexpr std::int64_t kInfinity =
      std::numeric_limits<std::int64_t>::max();

  explicit ParityDpTables(const ScaledInstance& scaled);

  std::uint64_t size() const { return even_.size(); }
  // Minimum weight for the given profit sum and parity, kInfinity if none.
  std::int64_t even(std::uint64_t profit_sum) const { return even_[profit_sum]; }
  std::int64_t odd(std::uint64_t profit_sum) const { return odd_[profit_sum]; }

  // The subset (ascending preprocessed indices) behind a finite cell.
  std::vector<std::size_t> Backtrack(std::uint64_t profit_sum,
                                     bool odd_parity) const;

 private:
  const ScaledInstance& scaled_;
  std::vector<std::int64_t> even_;
  std::vector<std::int64_t> odd_;
  // taken_[j * size + s]: bit 0 even cell, bit 1 odd cell took item j.
  std::vector<std::uint8_t> taken_;
};

// (1 - eps)-approximate solution on a preprocessed instance. Instances whose
// profits are all +-1 are answered directly (optimum 1). Errors as
// ScaleProfits.
Solution SolveFptas(const Instance& instance, const Rational& eps);

}  // namespace pkp

#endif  // PKP_FPTAS_H_
