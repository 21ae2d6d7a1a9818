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

// Exact integer kernels for every logarithm-dependent quantity in the
// library. Nothing in here touches floating point: a value such as
// floor(c * log2(x)) is decided by comparing powers of two against powers of
// x in arbitrary precision.

#ifndef PKP_NUMERICS_H_
#define PKP_NUMERICS_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pkp {

// Upper limit on the bit length of any intermediate power. Exceeding it is a
// hard error (kBitBudgetExceeded) rather than a slow computation.
inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 24;

// Strictly positive rational num/den in lowest terms.
class Rational {
 public:
  // Throws Error(kInvalidArgument) unless num > 0 and den > 0.
  Rational(mpz_class num, mpz_class den);
  explicit Rational(std::int64_t integer) : Rational(mpz_class(static_cast<long>(integer)), 1) {}

  // Accepts "a/b", "a" or a decimal literal such as "0.1" (parsed exactly as
  // 1/10). Throws Error(kParseError) on malformed or non-positive input.
  static Rational Parse(std::string_view text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  Rational Inverse() const { return Rational(den_, num_); }
  bool LessThanOne() const { return num_ < den_; }

  std::string ToString() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  mpz_class num_;
  mpz_class den_;
};

// Parses "a/b", "a" or a decimal literal ("0.25" is exactly 1/4) into a
// nonnegative rational. Throws Error(kParseError).
mpq_class ParseRationalValue(std::string_view text);

// floor(c * log2(x)) for x >= 1: the largest m with 2^(m*den) <= x^num.
std::uint64_t FloorScaledLog2(const mpz_class& x, const Rational& c,
                              std::uint64_t bit_budget = kDefaultBitBudget);

// ceil(c * log2(prod xs)): the smallest m with 2^(m*den) >= (prod xs)^num.
std::uint64_t CeilScaledLog2Sum(std::span<const mpz_class> xs,
                                const Rational& c,
                                std::uint64_t bit_budget = kDefaultBitBudget);

// r with r*r == x, or nullopt when x is not a perfect square. Binary search
// over [1, x].
std::optional<mpz_class> IntegerSqrtExact(const mpz_class& x);

// Orders items by |p|^(1/w), larger rate first: `greater` means the first
// item precedes the second. Zero-weight items precede every positive-weight
// item and are ordered among themselves by |p|. Exact ties are `equivalent`.
std::weak_ordering CompareProfitRate(std::int64_t profit_a,
                                     std::int64_t weight_a,
                                     std::int64_t profit_b,
                                     std::int64_t weight_b,
                                     std::uint64_t bit_budget =
                                         kDefaultBitBudget);

}  // namespace pkp

#endif  // PKP_NUMERICS_H_
