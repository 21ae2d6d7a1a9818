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

#include "pkp/fptas.h"

#include <algorithm>
#include <map>
#include <string>

#include "pkp/status.h"

namespace pkp {

namespace {

constexpr std::uint64_t kMaxDecisionCells = std::uint64_t{1} << 32;

std::int64_t AddWeight(std::int64_t base, std::int64_t w) {
  if (base == ParityDpTables::kInfinity) return ParityDpTables::kInfinity;
  // Weights are bounded by the capacity after preprocessing, but sums of
  // many items can still exceed it; saturate instead of overflowing.
  if (base > ParityDpTables::kInfinity - 1 - w) {
    return ParityDpTables::kInfinity - 1;
  }
  return base + w;
}

// Optimum is 1 when every profit is +-1: any positive item, or any feasible
// pair of negative items.
Solution SolveUnitProfits(const Instance& instance) {
  Solution s;
  for (std::size_t j : instance.PositiveItems()) {
    s.indices = {j};
    s.value = Evaluate(instance, s.indices);
    return s;
  }
  const auto negatives = instance.NegativeItems();
  for (std::size_t a = 0; a < negatives.size(); ++a) {
    for (std::size_t b = a + 1; b < negatives.size(); ++b) {
      const std::size_t pair[] = {negatives[a], negatives[b]};
      if (IsFeasible(instance, pair)) {
        s.indices = {pair[0], pair[1]};
        s.value = Evaluate(instance, s.indices);
        return s;
      }
    }
  }
  s.value = BigProduct(0);
  return s;
}

}  // namespace

ScaledInstance ScaleProfits(const Instance& instance, const Rational& eps) {
  if (!eps.LessThanOne()) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "eps must lie in (0, 1), got " + eps.ToString());
  }
  if (!instance.preprocessed()) {
    throw Error(ErrorCode::kNotPreprocessed,
                "FPTAS needs a preprocessed instance");
  }
  if (instance.empty()) {
    throw Error(ErrorCode::kEmptyInstance, "FPTAS needs at least one item");
  }
  const mpz_class n(static_cast<unsigned long>(instance.size()));
  ScaledInstance scaled;
  scaled.base = &instance;
  scaled.k = Rational(eps.num(), eps.den() * n * n);
  const Rational inverse_k = scaled.k.Inverse();
  // Many items share a magnitude; compute each floor-log once.
  std::map<std::int64_t, std::uint64_t> cache;
  scaled.scaled_profits.reserve(instance.size());
  for (const Item& it : instance.items()) {
    const std::int64_t magnitude = std::abs(it.profit);
    auto [pos, inserted] = cache.try_emplace(magnitude, 0);
    if (inserted) {
      pos->second =
          FloorScaledLog2(mpz_class(static_cast<long>(magnitude)), inverse_k);
    }
    scaled.scaled_profits.push_back(pos->second);
    scaled.scaled_max = std::max(scaled.scaled_max, pos->second);
  }
  return scaled;
}

std::uint64_t DpTableSize(std::uint64_t n, std::uint64_t scaled_max) {
  return n * scaled_max + 1;
}

ParityDpTables::ParityDpTables(const ScaledInstance& scaled)
    : scaled_(scaled) {
  const Instance& instance = *scaled.base;
  const std::size_t n = instance.size();
  const std::uint64_t size = DpTableSize(n, scaled.scaled_max);
  if (size > kMaxDecisionCells / std::max<std::size_t>(n, 1)) {
    throw Error(ErrorCode::kTooLarge,
                "FPTAS table of " + std::to_string(size) + " x " +
                    std::to_string(n) + " cells is too large");
  }
  even_.assign(size, kInfinity);
  odd_.assign(size, kInfinity);
  taken_.assign(size * n, 0);
  even_[0] = 0;

  std::uint64_t reach = 0;  // largest profit sum seen so far
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t step = scaled.scaled_profits[j];
    const std::int64_t w = instance.item(j).weight;
    const bool negative = instance.item(j).profit < 0;
    std::uint8_t* taken = taken_.data() + j * size;
    reach += step;
    // Descending sums keep sources at layer j-1; when step == 0 both parities
    // read their sources before writing.
    for (std::uint64_t s = reach + 1; s-- > step;) {
      const std::uint64_t src = s - step;
      const std::int64_t from_even = AddWeight(even_[src], w);
      const std::int64_t from_odd = AddWeight(odd_[src], w);
      const std::int64_t even_candidate = negative ? from_odd : from_even;
      const std::int64_t odd_candidate = negative ? from_even : from_odd;
      if (even_candidate < even_[s]) {
        even_[s] = even_candidate;
        taken[s] |= 1;
      }
      if (odd_candidate < odd_[s]) {
        odd_[s] = odd_candidate;
        taken[s] |= 2;
      }
    }
  }
}

std::vector<std::size_t> ParityDpTables::Backtrack(std::uint64_t profit_sum,
                                                   bool odd_parity) const {
  const Instance& instance = *scaled_.base;
  const std::uint64_t size = even_.size();
  std::vector<std::size_t> subset;
  std::uint64_t s = profit_sum;
  bool odd = odd_parity;
  for (std::size_t j = instance.size(); j-- > 0;) {
    if (!(taken_[j * size + s] & (odd ? 2 : 1))) continue;
    subset.push_back(j);
    s -= scaled_.scaled_profits[j];
    if (instance.item(j).profit < 0) odd = !odd;
  }
  std::reverse(subset.begin(), subset.end());
  return subset;
}

Solution SolveFptas(const Instance& instance, const Rational& eps) {
  const ScaledInstance scaled = ScaleProfits(instance, eps);
  if (instance.MaxAbsProfit() < 2) return SolveUnitProfits(instance);

  const ParityDpTables tables(scaled);
  std::uint64_t best = 0;
  for (std::uint64_t s = tables.size(); s-- > 0;) {
    if (tables.even(s) <= instance.capacity()) {
      best = s;
      break;
    }
  }
  Solution solution;
  solution.indices = tables.Backtrack(best, /*odd_parity=*/false);
  solution.value = Evaluate(instance, solution.indices);
  return solution;
}

}  // namespace pkp
