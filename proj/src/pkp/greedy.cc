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

#include "pkp/greedy.h"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "pkp/numerics.h"
#include "pkp/status.h"

namespace pkp {

const char* GreedyChoiceName(GreedyChoice choice) {
  switch (choice) {
    case GreedyChoice::kNone:
      return "none";
    case GreedyChoice::kGreedyFill:
      return "greedy_fill";
    case GreedyChoice::kNegativePair:
      return "negative_pair";
    case GreedyChoice::kSinglePositive:
      return "single_positive";
  }
  return "unknown";
}

std::string GreedyTrace::ToJson() const {
  nlohmann::ordered_json j;
  j["order"] = order;
  j["split_item"] = split_item ? nlohmann::ordered_json(*split_item) : nullptr;
  j["filled"] = filled;
  j["removed_for_parity"] = removed_for_parity
                                ? nlohmann::ordered_json(*removed_for_parity)
                                : nullptr;
  j["candidate_fill"] = candidate_fill;
  j["candidate_pair"] =
      candidate_pair ? nlohmann::ordered_json({candidate_pair->first,
                                               candidate_pair->second})
                     : nullptr;
  j["candidate_single"] = candidate_single
                              ? nlohmann::ordered_json(*candidate_single)
                              : nullptr;
  j["chosen"] = GreedyChoiceName(chosen);
  return j.dump();
}

GreedyResult SolveGreedy(const Instance& instance) {
  if (!instance.preprocessed()) {
    throw Error(ErrorCode::kNotPreprocessed,
                "Product Greedy needs a preprocessed instance");
  }
  const std::size_t n = instance.size();
  GreedyResult result;
  GreedyTrace& trace = result.trace;

  trace.order.resize(n);
  std::iota(trace.order.begin(), trace.order.end(), 0);
  std::stable_sort(trace.order.begin(), trace.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const Item& x = instance.item(a);
                     const Item& y = instance.item(b);
                     return CompareProfitRate(x.profit, x.weight, y.profit,
                                              y.weight) > 0;
                   });

  // Classical greedy: keep scanning after the first item that does not fit.
  std::int64_t remaining = instance.capacity();
  for (std::size_t j : trace.order) {
    if (instance.item(j).weight <= remaining) {
      remaining -= instance.item(j).weight;
      trace.filled.push_back(j);
    } else if (!trace.split_item) {
      trace.split_item = j;
    }
  }

  trace.candidate_fill = trace.filled;
  if (CountNegative(instance, trace.filled) % 2 == 1) {
    std::size_t weakest = n;
    for (std::size_t j : trace.filled) {
      if (instance.item(j).profit >= 0) continue;
      if (weakest == n ||
          std::pair(-instance.item(j).profit, j) <
              std::pair(-instance.item(weakest).profit, weakest)) {
        weakest = j;
      }
    }
    trace.removed_for_parity = weakest;
    std::erase(trace.candidate_fill, weakest);
  }
  std::sort(trace.candidate_fill.begin(), trace.candidate_fill.end());

  // Best feasible negative pair by full scan; first maximum in index order.
  const auto negatives = instance.NegativeItems();
  BigProduct pair_value(0);
  for (std::size_t a = 0; a < negatives.size(); ++a) {
    for (std::size_t b = a + 1; b < negatives.size(); ++b) {
      const Item& x = instance.item(negatives[a]);
      const Item& y = instance.item(negatives[b]);
      if (x.weight > instance.capacity() - y.weight) continue;
      BigProduct v = BigProduct(x.profit) * y.profit;
      if (!trace.candidate_pair || v > pair_value) {
        trace.candidate_pair = {negatives[a], negatives[b]};
        pair_value = std::move(v);
      }
    }
  }

  for (std::size_t j : instance.PositiveItems()) {
    if (!trace.candidate_single ||
        instance.item(j).profit > instance.item(*trace.candidate_single).profit) {
      trace.candidate_single = j;
    }
  }

  Solution& best = result.solution;
  best.value = BigProduct(0);
  const auto offer = [&](std::vector<std::size_t> subset, GreedyChoice kind) {
    if (subset.empty()) return;
    BigProduct v = Evaluate(instance, subset);
    if (v.sign() > 0 && v > best.value) {
      best.indices = std::move(subset);
      best.value = std::move(v);
      trace.chosen = kind;
    }
  };
  offer(trace.candidate_fill, GreedyChoice::kGreedyFill);
  if (trace.candidate_pair) {
    offer({trace.candidate_pair->first, trace.candidate_pair->second},
          GreedyChoice::kNegativePair);
  }
  if (trace.candidate_single) {
    offer({*trace.candidate_single}, GreedyChoice::kSinglePositive);
  }
  return result;
}

bool VerifyGreedyBounds(const Instance& instance, const BigProduct& greedy_value,
                        const BigProduct& optimal_value) {
  if (greedy_value == optimal_value) return true;
  const mpz_class& zh = greedy_value.raw();
  const mpz_class& zs = optimal_value.raw();
  const mpz_class p_max(static_cast<long>(instance.MaxAbsProfit()));
  return zh * zh * zh >= zs && zh * p_max * p_max >= zs;
}

}  // namespace pkp
