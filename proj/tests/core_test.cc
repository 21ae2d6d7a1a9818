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

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "pkp/instance_io.h"
#include "pkp/status.h"
#include "test_util.h"

namespace pkp {
namespace {

using Indices = std::vector<std::size_t>;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(EnforceAssumptionsTest, RemovesOversizeItem) {
  const Preprocessed pre = EnforceAssumptions(Instance({{5, 3}}, 2));
  EXPECT_TRUE(pre.instance.empty());
  EXPECT_EQ(pre.removed, Indices{0});
  EXPECT_TRUE(pre.instance.preprocessed());
}

TEST(EnforceAssumptionsTest, RemovesZeroProfit) {
  const Preprocessed pre = EnforceAssumptions(Instance({{0, 1}}, 5));
  EXPECT_TRUE(pre.instance.empty());
  EXPECT_EQ(pre.removed, Indices{0});
}

TEST(EnforceAssumptionsTest, RemovesUnpairedNegatives) {
  const Preprocessed pre =
      EnforceAssumptions(Instance({{-3, 4}, {-2, 4}, {7, 1}}, 5));
  EXPECT_EQ(pre.removed, (Indices{0, 1}));
  ASSERT_EQ(pre.instance.size(), 1u);
  EXPECT_EQ(pre.instance.item(0), (Item{7, 1}));
  EXPECT_EQ(pre.original_index, Indices{2});
}

TEST(EnforceAssumptionsTest, ForcesZeroWeightPositive) {
  const Preprocessed pre = EnforceAssumptions(Instance({{6, 0}}, 1));
  EXPECT_TRUE(pre.instance.empty());
  EXPECT_EQ(pre.forced, Indices{0});
  EXPECT_TRUE(pre.removed.empty());
}

TEST(EnforceAssumptionsTest, KeepsZeroWeightNegatives) {
  const Preprocessed pre = EnforceAssumptions(Instance({{-1, 0}, {-5, 2}}, 2));
  EXPECT_EQ(pre.instance.size(), 2u);
  EXPECT_TRUE(pre.forced.empty());
}

TEST(EnforceAssumptionsTest, PartnerRemovalRunsToFixpoint) {
  // -4 pairs only with the oversize -9, which goes first.
  const Preprocessed pre =
      EnforceAssumptions(Instance({{-4, 2}, {-9, 7}, {3, 1}}, 6));
  EXPECT_EQ(pre.removed, (Indices{0, 1}));
}

TEST(EnforceAssumptionsTest, Errors) {
  EXPECT_EQ(CodeOf([] { EnforceAssumptions(Instance({{2, -1}}, 3)); }),
            ErrorCode::kNegativeWeight);
  EXPECT_EQ(CodeOf([] { Instance({{2, 1}}, 0); }),
            ErrorCode::kNonPositiveCapacity);
}

// Raw instances with zero profits, oversize items and free positives.
Instance RawInstance(std::mt19937_64& rng) {
  const std::size_t n = rng() % 11;
  const std::int64_t capacity = 1 + static_cast<std::int64_t>(rng() % 20);
  std::vector<Item> items;
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t p = static_cast<std::int64_t>(rng() % 13) - 6;
    const std::int64_t w = static_cast<std::int64_t>(rng() % 25);
    items.push_back({p, rng() % 6 == 0 ? 0 : w});
  }
  return Instance(std::move(items), capacity);
}

TEST(EnforceAssumptionsTest, Idempotent) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Preprocessed once = EnforceAssumptions(RawInstance(rng));
    const Preprocessed twice = EnforceAssumptions(once.instance);
    EXPECT_EQ(twice.instance, once.instance);
    EXPECT_TRUE(twice.removed.empty());
    EXPECT_TRUE(twice.forced.empty());
  }
}

TEST(EnforceAssumptionsTest, PreservesOptimalValue) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance raw = RawInstance(rng);
    const Preprocessed pre = EnforceAssumptions(raw);
    mpz_class forced = 1;
    for (std::size_t j : pre.forced) {
      forced *= static_cast<long>(raw.item(j).profit);
    }
    mpz_class core = testing::OracleOptimum(pre.instance);
    if (core == 0 && !pre.forced.empty()) core = 1;
    EXPECT_EQ(core * forced, testing::OracleOptimum(raw)) << trial;
    if (!pre.instance.empty()) {
      EXPECT_GE(testing::OracleOptimum(pre.instance), 1);
    }
  }
}

TEST(EvaluateTest, Examples) {
  const Instance inst({{5, 1}, {-2, 1}, {-3, 1}}, 3);
  EXPECT_EQ(Evaluate(inst, {}), BigProduct(0));
  EXPECT_EQ(Evaluate(inst, Indices{0}), BigProduct(5));
  EXPECT_EQ(Evaluate(inst, Indices{1, 2}), BigProduct(6));
  EXPECT_EQ(Evaluate(inst, Indices{1}), BigProduct(-2));
  EXPECT_EQ(CodeOf([&] { Evaluate(inst, Indices{3}); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(EvaluateTest, ExceedsSixtyFourBits) {
  std::vector<Item> items(30, Item{9, 1});
  const Instance inst(items, 30);
  Indices all(30);
  for (std::size_t j = 0; j < 30; ++j) all[j] = j;
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 9, 30);
  EXPECT_EQ(Evaluate(inst, all).raw(), expected);
}

TEST(IsFeasibleTest, Examples) {
  EXPECT_TRUE(IsFeasible(Instance({{1, 5}}, 1), {}));
  EXPECT_FALSE(IsFeasible(Instance({{1, 2}, {1, 2}}, 3), Indices{0, 1}));
  EXPECT_TRUE(IsFeasible(Instance({{1, 2}, {1, 1}}, 3), Indices{0, 1}));
}

TEST(BigProductTest, OrderAndParsing) {
  EXPECT_LT(BigProduct(-5), BigProduct(0));
  EXPECT_LT(BigProduct(0), BigProduct(1));
  EXPECT_LT(BigProduct(-7), BigProduct(-5));
  EXPECT_EQ(BigProduct::FromString("-123"), BigProduct(-123));
  EXPECT_EQ(BigProduct(0).sign(), 0);
  EXPECT_TRUE(BigProduct(0).magnitude() == 0);
  EXPECT_THROW(BigProduct::FromString("12a"), Error);
  EXPECT_THROW(BigProduct::FromString(""), Error);
}

TEST(GenExample1Test, TableInstance) {
  const Instance inst = GenExample1(10);
  const std::vector<Item> expected = {{2, 1},   {12, 10}, {-11, 10}, {10, 10},
                                      {10, 10}, {10, 10}, {-1, 10}};
  EXPECT_EQ(std::vector<Item>(inst.items().begin(), inst.items().end()),
            expected);
  EXPECT_EQ(inst.capacity(), 30);
  EXPECT_EQ(CodeOf([] { GenExample1(2); }), ErrorCode::kMTooSmall);
}

TEST(GenExample1Test, OptimumIsMSquaredTimesMPlusTwo) {
  // Frozen from the enumeration oracle: {12, 10, 10} weighs 30 = C.
  EXPECT_EQ(testing::OracleOptimum(GenExample1(10)), 1200);
  EXPECT_EQ(testing::OracleOptimum(GenExample1(5)), 175);
}

TEST(GenRandomTest, DeterministicAndShaped) {
  RandomInstanceParams params;
  params.n = 12;
  params.seed = 7;
  EXPECT_EQ(GenRandom(params), GenRandom(params));
  params.n = 0;
  EXPECT_TRUE(GenRandom(params).empty());
  params.n = 50;
  params.neg_fraction = 0.0;
  const Instance positive = GenRandom(params);
  for (const Item& item : positive.items()) {
    EXPECT_GE(item.profit, params.profit_min);
    EXPECT_LE(item.profit, params.profit_max);
    EXPECT_GE(item.weight, params.weight_min);
    EXPECT_LE(item.weight, params.weight_max);
  }
  params.profit_min = 5;
  params.profit_max = 4;
  EXPECT_EQ(CodeOf([&] { GenRandom(params); }), ErrorCode::kInvalidRange);
}

TEST(InstanceIoTest, JsonRoundTripIsByteIdentical) {
  RandomInstanceParams params;
  params.n = 9;
  params.seed = 3;
  const std::string json = InstanceToJson(GenRandom(params));
  EXPECT_EQ(InstanceToJson(ParseInstance(json)), json);
  EXPECT_EQ(InstanceToJson(Instance({{-2, 1}}, 4)),
            "{\"capacity\": 4, \"items\": [{\"profit\": -2, \"weight\": 1}]}\n");
}

TEST(InstanceIoTest, TextFormat) {
  const Instance inst = ParseInstance("2 5\n3 1\n-4 2\n");
  EXPECT_EQ(inst, Instance({{3, 1}, {-4, 2}}, 5));
  EXPECT_EQ(InstanceToText(inst), "2 5\n3 1\n-4 2\n");
  EXPECT_EQ(ParseInstance(InstanceToText(inst)), inst);
}

TEST(InstanceIoTest, RejectsGarbage) {
  for (const char* bad :
       {"", "2 5\n3 1\n", "1 5\n3 1 7\n", "1 5\n3 x\n", "1 5\n3 1\nextra\n",
        "1 5\n3.5 1\n", "{\"capacity\": 4}",
        "{\"capacity\": 4, \"items\": [{\"profit\": 1}]}",
        "{\"capacity\": 4, \"items\": [], \"x\": 1}",
        "{\"capacity\": 4.5, \"items\": []}", "{\"capacity\": 4, \"items\": []} x"}) {
    EXPECT_EQ(CodeOf([&] { ParseInstance(bad); }), ErrorCode::kParseError)
        << bad;
  }
}

}  // namespace
}  // namespace pkp
