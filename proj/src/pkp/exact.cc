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

#include "pkp/exact.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pkp/status.h"

namespace pkp {

namespace {

// How a cell got its value in the current item's layer.
enum Move : std::uint8_t {
  kSkip = 0,
  kFromPositive = 1,
  kFromNegative = 2,
  kFromEmpty = 3,
};

// Upper bound on (weight cells) x (items) to keep the decision table sane.
constexpr std::uint64_t kMaxDpCells = std::uint64_t{1} << 31;

struct Cell {
  bool present = false;
  mpz_class value;
};

}  // namespace

Solution SolveExactDp(const Instance& instance) {
  if (!instance.preprocessed()) {
    throw Error(ErrorCode::kNotPreprocessed,
                "exact DP needs a preprocessed instance");
  }
  const std::size_t n = instance.size();
  __int128 total_weight = 0;
  for (const Item& it : instance.items()) total_weight += it.weight;
  const std::int64_t cap = static_cast<std::int64_t>(
      std::min<__int128>(instance.capacity(), total_weight));
  const std::size_t width = static_cast<std::size_t>(cap) + 1;
  if (static_cast<std::uint64_t>(width) * std::max<std::size_t>(n, 1) >
      kMaxDpCells) {
    throw Error(ErrorCode::kTooLarge,
                "exact DP table of " + std::to_string(width) + " x " +
                    std::to_string(n) + " cells is too large");
  }

  std::vector<Cell> pos(width);
  std::vector<Cell> neg(width);
  // Low nibble: move for the positive cell; high nibble: negative cell.
  std::vector<std::uint8_t> moves(n * width, 0);

  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t w_j = instance.item(j).weight;
    const long p_j = static_cast<long>(instance.item(j).profit);
    std::uint8_t* layer = moves.data() + j * width;
    // Descending weights: the source cell w - w_j is still at layer j-1. For
    // w_j == 0 both candidates are formed before either cell is written.
    for (std::int64_t w = cap; w >= w_j; --w) {
      const std::size_t src = static_cast<std::size_t>(w - w_j);
      const std::size_t dst = static_cast<std::size_t>(w);
      const Cell& src_pos = pos[src];
      const Cell& src_neg = neg[src];

      Cell best_pos;
      std::uint8_t pos_move = kSkip;
      Cell best_neg;
      std::uint8_t neg_move = kSkip;
      if (p_j > 0) {
        if (src_pos.present) {
          best_pos = {true, src_pos.value * p_j};
          pos_move = kFromPositive;
        }
        if (src == 0 && (!best_pos.present || best_pos.value < p_j)) {
          best_pos = {true, mpz_class(p_j)};
          pos_move = kFromEmpty;
        }
        if (src_neg.present) {
          best_neg = {true, src_neg.value * p_j};
          neg_move = kFromNegative;
        }
      } else {
        if (src_neg.present) {
          best_pos = {true, src_neg.value * p_j};
          pos_move = kFromNegative;
        }
        if (src_pos.present) {
          best_neg = {true, src_pos.value * p_j};
          neg_move = kFromPositive;
        }
        if (src == 0 && (!best_neg.present || best_neg.value > p_j)) {
          best_neg = {true, mpz_class(p_j)};
          neg_move = kFromEmpty;
        }
      }

      std::uint8_t code = 0;
      if (best_pos.present &&
          (!pos[dst].present || best_pos.value > pos[dst].value)) {
        pos[dst] = std::move(best_pos);
        code |= pos_move;
      }
      if (best_neg.present &&
          (!neg[dst].present || best_neg.value < neg[dst].value)) {
        neg[dst] = std::move(best_neg);
        code |= static_cast<std::uint8_t>(neg_move << 4);
      }
      layer[dst] = code;
    }
  }

  std::int64_t best_w = -1;
  for (std::int64_t w = 0; w <= cap; ++w) {
    const Cell& c = pos[static_cast<std::size_t>(w)];
    if (c.present &&
        (best_w < 0 || c.value > pos[static_cast<std::size_t>(best_w)].value)) {
      best_w = w;
    }
  }
  Solution solution;
  if (best_w < 0) {
    solution.value = BigProduct(0);
    return solution;
  }

  std::int64_t w = best_w;
  bool positive = true;
  for (std::size_t j = n; j-- > 0;) {
    const std::uint8_t code = moves[j * width + static_cast<std::size_t>(w)];
    const std::uint8_t move = positive ? (code & 0x0f) : (code >> 4);
    if (move == kSkip) continue;
    solution.indices.push_back(j);
    w -= instance.item(j).weight;
    if (move == kFromEmpty) break;
    positive = move == kFromPositive;
  }
  std::reverse(solution.indices.begin(), solution.indices.end());
  solution.value = Evaluate(instance, solution.indices);
  return solution;
}

Solution SolveBruteForce(const Instance& instance, std::size_t limit) {
  const std::size_t n = instance.size();
  if (n > limit || n >= 63) {
    throw Error(ErrorCode::kTooLarge,
                "brute force over " + std::to_string(n) +
                    " items exceeds the limit of " + std::to_string(limit));
  }
  Solution best;
  best.value = BigProduct(0);
  std::vector<std::size_t> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    std::size_t negatives = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        subset.push_back(j);
        if (instance.item(j).profit < 0) ++negatives;
      }
    }
    // Odd parity gives a negative product, never better than the empty set.
    if (negatives % 2 == 1 || !IsFeasible(instance, subset)) continue;
    BigProduct value = Evaluate(instance, subset);
    const auto order = value <=> best.value;
    if (order > 0 || (order == 0 && subset < best.indices)) {
      best.value = std::move(value);
      best.indices = subset;
    }
  }
  return best;
}

}  // namespace pkp
