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

// Data model of the product knapsack problem: pick a subset of items with
// total weight at most the capacity that maximizes the product of the
// (possibly negative) profits. The empty set is always feasible and is worth
// zero.

#ifndef PKP_CORE_H_
#define PKP_CORE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pkp/big_product.h"

namespace pkp {

struct Item {
  std::int64_t profit = 0;
  std::int64_t weight = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

struct Preprocessed;

// Immutable after construction. Capacity is always >= 1; weights may still be
// negative on a raw instance (EnforceAssumptions rejects them).
class Instance {
 public:
  // Throws Error(kNonPositiveCapacity) if capacity < 1.
  Instance(std::vector<Item> items, std::int64_t capacity);

  std::span<const Item> items() const { return items_; }
  const Item& item(std::size_t j) const { return items_[j]; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::int64_t capacity() const { return capacity_; }

  // Set only on instances produced by EnforceAssumptions.
  bool preprocessed() const { return preprocessed_; }

  // max |p_j| over all items, 0 on an empty instance. Likewise for the
  // positive (p+_max) and negative (p-_max) partitions.
  std::int64_t MaxAbsProfit() const;
  std::int64_t MaxPositiveProfit() const;
  std::int64_t MaxNegativeMagnitude() const;

  // Indices of N+ (p >= 1) and N- (p <= -1).
  std::vector<std::size_t> PositiveItems() const;
  std::vector<std::size_t> NegativeItems() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.capacity_ == b.capacity_ && a.items_ == b.items_ &&
           a.preprocessed_ == b.preprocessed_;
  }

 private:
  friend Preprocessed EnforceAssumptions(const Instance& raw);

  std::vector<Item> items_;
  std::int64_t capacity_;
  bool preprocessed_ = false;
};

// A solver result. Indices are sorted ascending and refer to the instance the
// solver ran on; `forced_items` are zero-weight positive items packed during
// preprocessing (already included in `indices` and `value` when reported
// against a raw instance).
struct Solution {
  std::vector<std::size_t> indices;
  BigProduct value;
  std::vector<std::size_t> forced_items;
};

struct Preprocessed {
  Instance instance;
  // original_index[k] is the raw index of preprocessed item k.
  std::vector<std::size_t> original_index;
  // Zero-weight positive-profit items, always packed.
  std::vector<std::size_t> forced;
  // Items dropped as useless, ascending raw indices.
  std::vector<std::size_t> removed;
};

// Removes useless items (zero profit, too heavy, negative items without a
// feasible negative partner) and extracts zero-weight positive items. Throws
// Error(kNegativeWeight) naming the first offending index.
Preprocessed EnforceAssumptions(const Instance& raw);

// Exact product of the selected profits, 0 for the empty set. Capacity is not
// checked. Throws Error(kIndexOutOfRange).
BigProduct Evaluate(const Instance& instance,
                    std::span<const std::size_t> indices);

// True iff the selected weights sum to at most the capacity.
bool IsFeasible(const Instance& instance, std::span<const std::size_t> indices);

// Number of negative-profit items among `indices`.
std::size_t CountNegative(const Instance& instance,
                          std::span<const std::size_t> indices);

// The seven-item instance on which Product Greedy is asymptotically bad:
// profits (2, M+2, -(M+1), M, M, M, -1), weights (1, M, ..., M), C = 3M.
// Throws Error(kMTooSmall) for M < 3.
Instance GenExample1(std::int64_t m);

struct RandomInstanceParams {
  std::size_t n = 0;
  // Profit magnitudes are drawn from [profit_min, profit_max], profit_min >= 1.
  std::int64_t profit_min = 1;
  std::int64_t profit_max = 9;
  std::int64_t weight_min = 0;
  std::int64_t weight_max = 15;
  std::int64_t capacity = 30;
  // Probability that a profit is negated.
  double neg_fraction = 0.5;
  std::uint64_t seed = 0;
};

// Deterministic for a fixed seed on every platform (mt19937_64 with explicit
// range reduction). Output is raw: it may violate the preprocessing
// assumptions. Throws Error(kInvalidRange).
Instance GenRandom(const RandomInstanceParams& params);

}  // namespace pkp

#endif  // PKP_CORE_H_
