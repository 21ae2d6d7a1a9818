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

// Product Partition -> product knapsack.
//
// Given a_1..a_n (all >= 2, product a perfect square T^2), build items with
// profit a_j and weight floor(M log2 a_j), capacity ceil(M/2 sum log2 a_j),
// where M = (n + 2)(T + 1). The knapsack optimum reaches T iff the a_j split
// into two halves of equal product, and then it equals T exactly.

#ifndef PKP_REDUCTION_H_
#define PKP_REDUCTION_H_

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pkp/core.h"

namespace pkp {

struct PppInstance {
  std::vector<std::int64_t> a;
};

struct ReductionOutput {
  Instance pkp;
  mpz_class m;
  // sqrt(prod a_j).
  mpz_class target;
  // The a_j after dropping ones; item j of `pkp` corresponds to normalized[j].
  std::vector<std::int64_t> normalized;
};

// Throws Error(kNonPositiveInput) for a_j < 1, Error(kEmptyAfterNormalization)
// if nothing is left once ones are dropped and Error(kNotPerfectSquare).
ReductionOutput ReducePppToPkp(const PppInstance& ppp);

// True iff some subset has product equal to that of its complement.
// Throws Error(kTooLarge) above `limit` entries.
bool SolvePppBruteForce(const PppInstance& ppp, std::size_t limit = 20);

struct CorrespondenceReport {
  bool ppp_yes = false;
  BigProduct pkp_optimum;
  mpz_class target;
  mpz_class m;
  std::int64_t capacity = 0;
  // PPP yes  <=>  knapsack optimum >= target.
  bool equivalence_holds = false;
  // On yes-instances the knapsack optimum equals the target.
  bool equality_on_yes = false;
  // Every equal-product half fits into the knapsack.
  bool forward_feasibility = false;
  // Every subset with product >= target + 1 weighs at least C + 1.
  bool infeasibility_chain = false;

  bool ok() const {
    return equivalence_holds && equality_on_yes && forward_feasibility &&
           infeasibility_chain;
  }
  std::string ToJson() const;
};

// Brute-forces both sides. Throws Error(kTooLarge) when the normalized
// instance has more than `limit` entries, plus the ReducePppToPkp errors.
CorrespondenceReport VerifyCorrespondence(const PppInstance& ppp,
                                          std::size_t limit = 10);

// Whitespace separated positive integers; throws Error(kParseError).
PppInstance ParsePpp(const std::string& text);

}  // namespace pkp

#endif  // PKP_REDUCTION_H_
