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

// Product Greedy: sort by |p|^(1/w), fill greedily, drop the weakest negative
// item if the fill has odd parity, and return the best of that fill, the best
// feasible pair of negative items and the best single positive item.
//
// The result satisfies (z^H)^3 >= z* and z^H * p_max^2 >= z*, and no better
// ratio holds in general (see GenExample1).

#ifndef PKP_GREEDY_H_
#define PKP_GREEDY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pkp/core.h"

namespace pkp {

enum class GreedyChoice { kNone, kGreedyFill, kNegativePair, kSinglePositive };

const char* GreedyChoiceName(GreedyChoice choice);

struct GreedyTrace {
  // Items in processing order.
  std::vector<std::size_t> order;
  // First item in `order` that did not fit when reached.
  std::optional<std::size_t> split_item;
  // Greedy fill before and after the parity repair.
  std::vector<std::size_t> filled;
  std::optional<std::size_t> removed_for_parity;
  std::vector<std::size_t> candidate_fill;
  std::optional<std::pair<std::size_t, std::size_t>> candidate_pair;
  std::optional<std::size_t> candidate_single;
  GreedyChoice chosen = GreedyChoice::kNone;

  // {"order": [...], "split_item": k|null, ...}
  std::string ToJson() const;
};

struct GreedyResult {
  Solution solution;
  GreedyTrace trace;
};

// Requires a preprocessed instance (Error(kNotPreprocessed)).
GreedyResult SolveGreedy(const Instance& instance);

// (z^H)^3 >= z* and z^H * p_max^2 >= z*, in exact integers.
bool VerifyGreedyBounds(const Instance& instance, const BigProduct& greedy_value,
                        const BigProduct& optimal_value);

}  // namespace pkp

#endif  // PKP_GREEDY_H_
