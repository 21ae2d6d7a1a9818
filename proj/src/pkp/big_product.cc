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

#include "pkp/big_product.h"

#include "pkp/status.h"

namespace pkp {

BigProduct BigProduct::FromString(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  mpz_class v;
  if (!ok || v.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::kParseError,
                "not a decimal integer: '" + std::string(text) + "'");
  }
  return BigProduct(std::move(v));
}

}  // namespace pkp
