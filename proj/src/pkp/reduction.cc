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

#include "pkp/reduction.h"

#include <charconv>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "pkp/exact.h"
#include "pkp/numerics.h"
#include "pkp/status.h"

namespace pkp {

namespace {

mpz_class ProductOf(const std::vector<std::int64_t>& a) {
  mpz_class p = 1;
  for (std::int64_t x : a) p *= static_cast<long>(x);
  return p;
}

std::int64_t ToInt64(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + " overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

ReductionOutput ReducePppToPkp(const PppInstance& ppp) {
  std::vector<std::int64_t> normalized;
  for (std::int64_t x : ppp.a) {
    if (x < 1) {
      throw Error(ErrorCode::kNonPositiveInput,
                  "PPP entries must be positive, got " + std::to_string(x));
    }
    if (x >= 2) normalized.push_back(x);
  }
  if (normalized.empty()) {
    throw Error(ErrorCode::kEmptyAfterNormalization,
                "no entry >= 2 left after dropping ones");
  }
  const mpz_class product = ProductOf(normalized);
  const std::optional<mpz_class> root = IntegerSqrtExact(product);
  if (!root) {
    throw Error(ErrorCode::kNotPerfectSquare,
                "product " + product.get_str() +
                    " is not a perfect square; the instance is trivially no");
  }
  const mpz_class m =
      mpz_class(static_cast<unsigned long>(normalized.size() + 2)) *
      (*root + 1);

  const Rational full(m, 1);
  const Rational half(m, 2);
  std::vector<Item> items;
  std::vector<mpz_class> factors;
  for (std::int64_t x : normalized) {
    const mpz_class big(static_cast<long>(x));
    factors.push_back(big);
    items.push_back({x, ToInt64(FloorScaledLog2(big, full), "item weight")});
  }
  const std::int64_t capacity =
      ToInt64(CeilScaledLog2Sum(factors, half), "capacity");
  return ReductionOutput{Instance(std::move(items), capacity), m, *root,
                         std::move(normalized)};
}

bool SolvePppBruteForce(const PppInstance& ppp, std::size_t limit) {
  const std::size_t n = ppp.a.size();
  if (n > limit || n >= 63) {
    throw Error(ErrorCode::kTooLarge,
                "PPP brute force over " + std::to_string(n) +
                    " entries exceeds the limit of " + std::to_string(limit));
  }
  const mpz_class total = ProductOf(ppp.a);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    mpz_class part = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) part *= static_cast<long>(ppp.a[j]);
    }
    if (part * part == total) return true;
  }
  return false;
}

std::string CorrespondenceReport::ToJson() const {
  nlohmann::ordered_json j;
  j["ppp_yes"] = ppp_yes;
  j["pkp_optimum"] = pkp_optimum.ToString();
  j["target"] = target.get_str();
  j["M"] = m.get_str();
  j["capacity"] = capacity;
  j["equivalence_holds"] = equivalence_holds;
  j["equality_on_yes"] = equality_on_yes;
  j["forward_feasibility"] = forward_feasibility;
  j["infeasibility_chain"] = infeasibility_chain;
  j["ok"] = ok();
  return j.dump();
}

CorrespondenceReport VerifyCorrespondence(const PppInstance& ppp,
                                          std::size_t limit) {
  const ReductionOutput red = ReducePppToPkp(ppp);
  const std::size_t n = red.normalized.size();
  if (n > limit) {
    throw Error(ErrorCode::kTooLarge,
                "correspondence check over " + std::to_string(n) +
                    " entries exceeds the limit of " + std::to_string(limit));
  }
  CorrespondenceReport report;
  report.target = red.target;
  report.m = red.m;
  report.capacity = red.pkp.capacity();
  report.ppp_yes = SolvePppBruteForce(PppInstance{red.normalized}, limit);
  report.pkp_optimum = SolveBruteForce(red.pkp, limit).value;

  const BigProduct target(red.target);
  report.equivalence_holds = report.ppp_yes == (report.pkp_optimum >= target);
  report.equality_on_yes = !report.ppp_yes || report.pkp_optimum == target;

  const mpz_class square = red.target * red.target;
  report.forward_feasibility = true;
  report.infeasibility_chain = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    mpz_class part = 1;
    __int128 weight = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        part *= static_cast<long>(red.normalized[j]);
        weight += red.pkp.item(j).weight;
      }
    }
    if (part * part == square && weight > red.pkp.capacity()) {
      report.forward_feasibility = false;
    }
    if (part >= red.target + 1 && weight < __int128{red.pkp.capacity()} + 1) {
      report.infeasibility_chain = false;
    }
  }
  return report;
}

PppInstance ParsePpp(const std::string& text) {
  PppInstance ppp;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParseError, "not an integer: '" + token + "'");
    }
    ppp.a.push_back(value);
  }
  return ppp;
}

}  // namespace pkp
