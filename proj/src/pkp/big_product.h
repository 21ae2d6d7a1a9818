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

#ifndef PKP_BIG_PRODUCT_H_
#define PKP_BIG_PRODUCT_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pkp {

// Exact signed objective value. Products of n profits reach p_max^n, far
// beyond 64 bits, so all objective arithmetic goes through this type.
class BigProduct {
 public:
  BigProduct() = default;
  explicit BigProduct(std::int64_t v) : value_(static_cast<long>(v)) {}
  explicit BigProduct(mpz_class v) : value_(std::move(v)) {}

  static BigProduct One() { return BigProduct(1); }

  // Parses an optionally signed decimal integer; throws Error(kParseError).
  static BigProduct FromString(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  mpz_class magnitude() const { return abs(value_); }
  const mpz_class& raw() const { return value_; }

  BigProduct& operator*=(std::int64_t factor) {
    value_ *= static_cast<long>(factor);
    return *this;
  }
  BigProduct& operator*=(const BigProduct& other) {
    value_ *= other.value_;
    return *this;
  }
  friend BigProduct operator*(BigProduct a, std::int64_t b) { return a *= b; }
  friend BigProduct operator*(BigProduct a, const BigProduct& b) {
    return a *= b;
  }

  std::string ToString() const { return value_.get_str(); }

  friend bool operator==(const BigProduct& a, const BigProduct& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigProduct& a,
                                          const BigProduct& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpz_class value_;
};

}  // namespace pkp

#endif  // PKP_BIG_PRODUCT_H_
