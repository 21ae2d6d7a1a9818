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

#include "pkp/status.h"

namespace pkp {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kNegativeWeight:
      return "NegativeWeight";
    case ErrorCode::kNonPositiveCapacity:
      return "NonPositiveCapacity";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kEpsOutOfRange:
      return "EpsOutOfRange";
    case ErrorCode::kEmptyInstance:
      return "EmptyInstance";
    case ErrorCode::kNotPreprocessed:
      return "NotPreprocessed";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNotPerfectSquare:
      return "NotPerfectSquare";
    case ErrorCode::kEmptyAfterNormalization:
      return "EmptyAfterNormalization";
    case ErrorCode::kMTooSmall:
      return "MTooSmall";
    case ErrorCode::kInvalidRange:
      return "InvalidRange";
    case ErrorCode::kBitBudgetExceeded:
      return "BitBudgetExceeded";
    case ErrorCode::kNonPositiveInput:
      return "NonPositiveInput";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

}  // namespace pkp
