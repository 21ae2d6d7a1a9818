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

#ifndef PKP_STATUS_H_
#define PKP_STATUS_H_

#include <stdexcept>
#include <string>

namespace pkp {

// Numeric values are shared with the pkp_status enum of the C API.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParseError = 2,
  kNegativeWeight = 3,
  kNonPositiveCapacity = 4,
  kIndexOutOfRange = 5,
  kEpsOutOfRange = 6,
  kEmptyInstance = 7,
  kNotPreprocessed = 8,
  kTooLarge = 9,
  kNotPerfectSquare = 10,
  kEmptyAfterNormalization = 11,
  kMTooSmall = 12,
  kInvalidRange = 13,
  kBitBudgetExceeded = 14,
  kNonPositiveInput = 15,
  kIoError = 16,
  kInternal = 99,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pkp

#endif  // PKP_STATUS_H_
