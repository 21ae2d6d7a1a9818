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
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "pkp/exact.h"
#include "test_util.h"

namespace pkp {
namespace {

using Indices = std::vector<std::size_t>;

Instance Pre(std::vector<Item> items, std::int64_t capacity) {
  return EnforceAssumptions(Instance(std::move(items), capacity)).instance;
}

TEST(SolveGreedyTest, ExampleOneTrace) {
  const Instance inst = EnforceAssumptions(GenExample1(10)).instance;
  ASSERT_EQ(inst.size(), 7u);
  const GreedyResult r = SolveGreedy(inst);
  EXPECT_EQ(r.trace.order, (Indices{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(r.trace.split_item, 3u);
  EXPECT_EQ(r.trace.filled, (Indices{0, 1, 2}));
  EXPECT_EQ(r.trace.removed_for_parity, 2u);
  EXPECT_EQ(r.trace.candidate_fill, (Indices{0, 1}));
  ASSERT_TRUE(r.trace.candidate_pair.has_value());
  EXPECT_EQ(*r.trace.candidate_pair, std::make_pair(std::size_t{2},
                                                    std::size_t{6}));
  EXPECT_EQ(Evaluate(inst, Indices{2, 6}), BigProduct(11));
  EXPECT_EQ(r.trace.candidate_single, 1u);
  EXPECT_EQ(r.trace.chosen, GreedyChoice::kGreedyFill);
  EXPECT_EQ(r.solution.indices, (Indices{0, 1}));
  EXPECT_EQ(r.solution.value, BigProduct(24));
  EXPECT_NE(r.trace.ToJson().find("\"split_item\":3"), std::string::npos)
      << r.trace.ToJson();
}

TEST(SolveGreedyTest, SmallExamples) {
  GreedyResult r = SolveGreedy(Pre({{7, 1}}, 1));
  EXPECT_EQ(r.solution.indices, Indices{0});
  EXPECT_EQ(r.solution.value, BigProduct(7));

  r = SolveGreedy(Pre({{-2, 1}, {-3, 1}, {-5, 1}}, 2));
  EXPECT_EQ(r.solution.value, BigProduct(15));
  EXPECT_EQ(r.solution.indices, (Indices{1, 2}));

  // A lone -3 is dropped by preprocessing, so give it a partner. The fill
  // {-3, 2} is odd; repair leaves {2}, and the pair {-3, -1} wins with 3.
  r = SolveGreedy(Pre({{2, 1}, {-3, 1}, {-1, 1}}, 2));
  EXPECT_EQ(r.trace.filled, (Indices{1, 0}));
  EXPECT_EQ(r.trace.removed_for_parity, 1u);
  EXPECT_EQ(r.trace.candidate_fill, Indices{0});
  EXPECT_EQ(r.trace.chosen, GreedyChoice::kNegativePair);
  EXPECT_EQ(r.solution.value, BigProduct(3));

  r = SolveGreedy(Pre({}, 1));
  EXPECT_TRUE(r.solution.indices.empty());
  EXPECT_EQ(r.solution.value, BigProduct(0));
  EXPECT_EQ(r.trace.chosen, GreedyChoice::kNone);
}

TEST(VerifyGreedyBoundsTest, Examples) {
  const Instance ex1 = GenExample1(10);
  EXPECT_TRUE(VerifyGreedyBounds(ex1, BigProduct(24), BigProduct(1000)));
  EXPECT_TRUE(VerifyGreedyBounds(ex1, BigProduct(24), BigProduct(1200)));
  EXPECT_TRUE(VerifyGreedyBounds(ex1, BigProduct(7), BigProduct(7)));
  // 2^3 = 8 < 9.
  EXPECT_FALSE(VerifyGreedyBounds(Instance({{3, 1}}, 1), BigProduct(2),
                                  BigProduct(9)));
}

TEST(GreedyPropertyTest, BoundsParityAndPairInequality) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance inst = testing::AcceptanceInstance(seed).instance;
    const GreedyResult r = SolveGreedy(inst);
    const mpz_class opt = testing::OracleOptimum(inst);
    const mpz_class& zh = r.solution.value.raw();
    const mpz_class p_max(static_cast<long>(inst.MaxAbsProfit()));
    ASSERT_GE(zh * zh * zh, opt) << seed;
    ASSERT_GE(zh * p_max * p_max, opt) << seed;
    EXPECT_TRUE(VerifyGreedyBounds(inst, r.solution.value, BigProduct(opt)));
    EXPECT_TRUE(IsFeasible(inst, r.solution.indices));
    EXPECT_EQ(Evaluate(inst, r.solution.indices), r.solution.value);
    EXPECT_EQ(CountNegative(inst, r.solution.indices) % 2, 0u);
    if (!inst.empty()) {
      EXPECT_GE(r.solution.value, BigProduct(1));
    }
    if (r.trace.candidate_pair) {
      const auto [a, b] = *r.trace.candidate_pair;
      EXPECT_GE(inst.item(a).profit * inst.item(b).profit,
                inst.MaxNegativeMagnitude());
    }
  }
}

TEST(GreedyPropertyTest, ExampleOneTightness) {
  for (std::int64_t m : {10, 100, 1000}) {
    const Instance inst = EnforceAssumptions(GenExample1(m)).instance;
    const BigProduct zh = SolveGreedy(inst).solution.value;
    const BigProduct opt = SolveExactDp(inst).value;
    EXPECT_EQ(zh, BigProduct(2 * (m + 2)));
    // z^H / z* = 2(M+2) / (M^2 (M+2)) = 2 / M^2.
    EXPECT_EQ(zh.raw() * m * m, 2 * opt.raw()) << m;
  }
}

TEST(GreedyPropertyTest, OrderMatchesLogRates) {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Instance inst = testing::AcceptanceInstance(seed).instance;
    const auto rate = [&](std::size_t j) {
      const Item& it = inst.item(j);
      const long double mag = std::abs(it.profit);
      return it.weight == 0 ? 1e30L + mag : std::log(mag) / it.weight;
    };
    std::vector<long double> rates(inst.size());
    for (std::size_t j = 0; j < inst.size(); ++j) rates[j] = rate(j);
    bool ties = false;
    for (std::size_t a = 0; a < inst.size(); ++a) {
      for (std::size_t b = a + 1; b < inst.size(); ++b) {
        if (std::fabs(rates[a] - rates[b]) < 1e-12L) ties = true;
      }
    }
    if (ties) continue;
    Indices expected(inst.size());
    std::iota(expected.begin(), expected.end(), 0);
    std::sort(expected.begin(), expected.end(),
              [&](std::size_t a, std::size_t b) { return rates[a] > rates[b]; });
    EXPECT_EQ(SolveGreedy(inst).trace.order, expected) << seed;
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

}  // namespace
}  // namespace pkp
