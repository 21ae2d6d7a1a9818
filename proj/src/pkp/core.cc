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

#include "pkp/core.h"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "pkp/status.h"

namespace pkp {

Instance::Instance(std::vector<Item> items, std::int64_t capacity)
    : items_(std::move(items)), capacity_(capacity) {
  if (capacity_ < 1) {
    throw Error(ErrorCode::kNonPositiveCapacity,
                "capacity must be >= 1, got " + std::to_string(capacity_));
  }
  for (std::size_t j = 0; j < items_.size(); ++j) {
    if (items_[j].profit == std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "profit of item " + std::to_string(j) + " is out of range");
    }
  }
}

std::int64_t Instance::MaxAbsProfit() const {
  std::int64_t best = 0;
  for (const Item& it : items_) best = std::max(best, std::abs(it.profit));
  return best;
}

std::int64_t Instance::MaxPositiveProfit() const {
  std::int64_t best = 0;
  for (const Item& it : items_) {
    if (it.profit >= 1) best = std::max(best, it.profit);
  }
  return best;
}

std::int64_t Instance::MaxNegativeMagnitude() const {
  std::int64_t best = 0;
  for (const Item& it : items_) {
    if (it.profit <= -1) best = std::max(best, -it.profit);
  }
  return best;
}

std::vector<std::size_t> Instance::PositiveItems() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < items_.size(); ++j) {
    if (items_[j].profit >= 1) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> Instance::NegativeItems() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < items_.size(); ++j) {
    if (items_[j].profit <= -1) out.push_back(j);
  }
  return out;
}

namespace {

// Drops every negative item whose lightest possible negative partner does not
// fit next to it. Returns true if anything was dropped.
bool DropUnpairedNegatives(const std::vector<Item>& items,
                           std::vector<bool>& keep, std::int64_t capacity) {
  std::vector<std::size_t> negatives;
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (keep[j] && items[j].profit < 0) negatives.push_back(j);
  }
  std::sort(negatives.begin(), negatives.end(),
            [&](std::size_t a, std::size_t b) {
              return std::pair(items[a].weight, a) <
                     std::pair(items[b].weight, b);
            });
  bool changed = false;
  for (std::size_t k = 0; k < negatives.size(); ++k) {
    // Cheapest partner is the lightest other negative item.
    std::size_t partner_slot = k == 0 ? 1 : 0;
    if (partner_slot >= negatives.size() ||
        items[negatives[k]].weight > capacity - items[negatives[partner_slot]].weight) {
      keep[negatives[k]] = false;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

Preprocessed EnforceAssumptions(const Instance& raw) {
  const auto items = raw.items();
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (items[j].weight < 0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "item " + std::to_string(j) + " has negative weight " +
                      std::to_string(items[j].weight));
    }
  }
  const std::int64_t capacity = raw.capacity();
  std::vector<Item> all(items.begin(), items.end());
  std::vector<bool> keep(all.size(), true);
  std::vector<std::size_t> forced;
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (all[j].profit == 0 || all[j].weight > capacity) {
      keep[j] = false;
    } else if (all[j].weight == 0 && all[j].profit > 0) {
      keep[j] = false;
      forced.push_back(j);
    }
  }
  while (DropUnpairedNegatives(all, keep, capacity)) {
  }

  std::vector<Item> kept;
  std::vector<std::size_t> original_index;
  std::vector<std::size_t> removed;
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (keep[j]) {
      kept.push_back(all[j]);
      original_index.push_back(j);
    } else if (!std::binary_search(forced.begin(), forced.end(), j)) {
      removed.push_back(j);
    }
  }
  Instance instance(std::move(kept), capacity);
  instance.preprocessed_ = true;
  return Preprocessed{std::move(instance), std::move(original_index),
                      std::move(forced), std::move(removed)};
}

BigProduct Evaluate(const Instance& instance,
                    std::span<const std::size_t> indices) {
  if (indices.empty()) return BigProduct(0);
  BigProduct value = BigProduct::One();
  for (std::size_t j : indices) {
    if (j >= instance.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "item index " + std::to_string(j) + " out of range for " +
                      std::to_string(instance.size()) + " items");
    }
    value *= instance.item(j).profit;
  }
  return value;
}

bool IsFeasible(const Instance& instance,
                std::span<const std::size_t> indices) {
  // Accumulate in 128 bits; capacity and weights are 64-bit.
  __int128 total = 0;
  for (std::size_t j : indices) {
    if (j >= instance.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "item index " + std::to_string(j) + " out of range for " +
                      std::to_string(instance.size()) + " items");
    }
    total += instance.item(j).weight;
  }
  return total <= instance.capacity();
}

std::size_t CountNegative(const Instance& instance,
                          std::span<const std::size_t> indices) {
  std::size_t count = 0;
  for (std::size_t j : indices) {
    if (instance.item(j).profit < 0) ++count;
  }
  return count;
}

Instance GenExample1(std::int64_t m) {
  if (m < 3) {
    throw Error(ErrorCode::kMTooSmall,
                "example 1 needs M >= 3, got " + std::to_string(m));
  }
  if (m > std::numeric_limits<std::int64_t>::max() / 3 - 2) {
    throw Error(ErrorCode::kInvalidRange, "M is too large");
  }
  return Instance({{2, 1},
                   {m + 2, m},
                   {-(m + 1), m},
                   {m, m},
                   {m, m},
                   {m, m},
                   {-1, m}},
                  3 * m);
}

Instance GenRandom(const RandomInstanceParams& params) {
  if (params.profit_min < 1 || params.profit_max < params.profit_min) {
    throw Error(ErrorCode::kInvalidRange,
                "profit magnitude range must satisfy 1 <= min <= max");
  }
  if (params.weight_min < 0 || params.weight_max < params.weight_min) {
    throw Error(ErrorCode::kInvalidRange,
                "weight range must satisfy 0 <= min <= max");
  }
  if (params.capacity < 1) {
    throw Error(ErrorCode::kInvalidRange, "capacity must be >= 1");
  }
  if (!(params.neg_fraction >= 0.0 && params.neg_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidRange, "neg_fraction must lie in [0, 1]");
  }
  std::mt19937_64 rng(params.seed);
  const auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
  };
  std::vector<Item> items;
  items.reserve(params.n);
  for (std::size_t j = 0; j < params.n; ++j) {
    std::int64_t profit = draw(params.profit_min, params.profit_max);
    const std::int64_t weight = draw(params.weight_min, params.weight_max);
    // 53 random bits mapped to [0, 1).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < params.neg_fraction) profit = -profit;
    items.push_back({profit, weight});
  }
  return Instance(std::move(items), params.capacity);
}

}  // namespace pkp
