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

#include "pkp/numerics.h"

#include <numeric>

#include "pkp/status.h"

namespace pkp {

namespace {

std::uint64_t BitLength(const mpz_class& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// x^e with a budget check on the estimated result size.
mpz_class CheckedPow(const mpz_class& x, const mpz_class& e,
                     std::uint64_t bit_budget) {
  if (x == 1 || e == 0) return 1;
  const mpz_class estimate = e * BitLength(x);
  if (estimate > mpz_class(static_cast<unsigned long>(bit_budget))) {
    throw Error(ErrorCode::kBitBudgetExceeded,
                "power " + x.get_str() + "^" + e.get_str() +
                    " exceeds the bit budget of " +
                    std::to_string(bit_budget) + " bits");
  }
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), x.get_mpz_t(), e.get_ui());
  return result;
}

std::uint64_t ToU64(const mpz_class& v) {
  if (!v.fits_ulong_p()) {
    throw Error(ErrorCode::kBitBudgetExceeded,
                "value " + v.get_str() + " does not fit 64 bits");
  }
  return v.get_ui();
}

bool ParseDigits(std::string_view s, mpz_class* out) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return out->set_str(std::string(s), 10) == 0;
}

}  // namespace

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_ <= 0 || den_ <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "rational must be positive, got " + num_.get_str() + "/" +
                    den_.get_str());
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  num_ /= g;
  den_ /= g;
}

mpq_class ParseRationalValue(std::string_view text) {
  const auto fail = [&]() -> Error {
    return Error(ErrorCode::kParseError,
                 "not a nonnegative rational: '" + std::string(text) + "'");
  };
  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!ParseDigits(text.substr(0, slash), &num) ||
        !ParseDigits(text.substr(slash + 1), &den)) {
      throw fail();
    }
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    mpz_class w = 0;
    mpz_class f = 0;
    if (!whole.empty() && !ParseDigits(whole, &w)) throw fail();
    if (!frac.empty() && !ParseDigits(frac, &f)) throw fail();
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    num = w * den + f;
  } else if (!ParseDigits(text, &num)) {
    throw fail();
  }
  if (den == 0) throw fail();
  mpq_class value(num, den);
  value.canonicalize();
  return value;
}

Rational Rational::Parse(std::string_view text) {
  const mpq_class value = ParseRationalValue(text);
  if (value <= 0) {
    throw Error(ErrorCode::kParseError,
                "not a positive rational: '" + std::string(text) + "'");
  }
  return Rational(value.get_num(), value.get_den());
}

std::string Rational::ToString() const {
  return num_.get_str() + "/" + den_.get_str();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::uint64_t FloorScaledLog2(const mpz_class& x, const Rational& c,
                              std::uint64_t bit_budget) {
  if (x < 1) {
    throw Error(ErrorCode::kNonPositiveInput,
                "logarithm argument must be >= 1, got " + x.get_str());
  }
  if (x == 1) return 0;
  // 2^(m*den) <= X  <=>  m*den <= floor(log2 X) = bitlength(X) - 1.
  const mpz_class power = CheckedPow(x, c.num(), bit_budget);
  const mpz_class m = mpz_class(BitLength(power) - 1) / c.den();
  return ToU64(m);
}

std::uint64_t CeilScaledLog2Sum(std::span<const mpz_class> xs,
                                const Rational& c,
                                std::uint64_t bit_budget) {
  mpz_class product = 1;
  for (const mpz_class& x : xs) {
    if (x < 1) {
      throw Error(ErrorCode::kNonPositiveInput,
                  "logarithm argument must be >= 1, got " + x.get_str());
    }
    product *= x;
  }
  if (product == 1) return 0;
  const mpz_class power = CheckedPow(product, c.num(), bit_budget);
  const std::uint64_t top_bit = BitLength(power) - 1;
  const mpz_class floor_m = mpz_class(top_bit) / c.den();
  // Equality 2^(m*den) == X needs X to be a power of two whose exponent is a
  // multiple of den.
  const bool exact = mpz_popcount(power.get_mpz_t()) == 1 &&
                     floor_m * c.den() == mpz_class(top_bit);
  return ToU64(exact ? floor_m : floor_m + 1);
}

std::optional<mpz_class> IntegerSqrtExact(const mpz_class& x) {
  if (x < 1) {
    throw Error(ErrorCode::kNonPositiveInput,
                "square root argument must be >= 1, got " + x.get_str());
  }
  mpz_class lo = 1;
  mpz_class hi = x;
  while (lo <= hi) {
    mpz_class mid = (lo + hi) / 2;
    const int c = cmp(mid * mid, x);
    if (c == 0) return mid;
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

std::weak_ordering CompareProfitRate(std::int64_t profit_a,
                                     std::int64_t weight_a,
                                     std::int64_t profit_b,
                                     std::int64_t weight_b,
                                     std::uint64_t bit_budget) {
  const mpz_class abs_a = abs(mpz_class(static_cast<long>(profit_a)));
  const mpz_class abs_b = abs(mpz_class(static_cast<long>(profit_b)));
  const auto order = [](int c) {
    if (c > 0) return std::weak_ordering::greater;
    if (c < 0) return std::weak_ordering::less;
    return std::weak_ordering::equivalent;
  };
  if (weight_a == 0 && weight_b == 0) return order(cmp(abs_a, abs_b));
  if (weight_a == 0) return std::weak_ordering::greater;
  if (weight_b == 0) return std::weak_ordering::less;
  // |a|^(1/wa) vs |b|^(1/wb)  <=>  |a|^(wb/g) vs |b|^(wa/g).
  const std::int64_t g = std::gcd(weight_a, weight_b);
  const mpz_class lhs =
      CheckedPow(abs_a, mpz_class(static_cast<long>(weight_b / g)), bit_budget);
  const mpz_class rhs =
      CheckedPow(abs_b, mpz_class(static_cast<long>(weight_a / g)), bit_budget);
  return order(cmp(lhs, rhs));
}

}  // namespace pkp
