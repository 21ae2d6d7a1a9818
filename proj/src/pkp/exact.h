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

#ifndef PKP_EXACT_H_
#define PKP_EXACT_H_

#include <cstddef>

#include "pkp/core.h"

namespace pkp {

inline constexpr std::size_t kDefaultBruteForceLimit = 20;

// Dynamic programming by weights in O(nC) cells. Each cell w keeps the largest
// positive and the most negative product over nonempty subsets of total
// weight exactly w; values are exact big integers. Requires a preprocessed
// instance (Error(kNotPreprocessed)).
Solution SolveExactDp(const Instance& instance);

// Enumerates all 2^n subsets. Works on any instance with nonnegative weights;
// ties go to the lexicographically smallest index set. Throws Error(kTooLarge)
// when n > limit.
Solution SolveBruteForce(const Instance& instance,
                         std::size_t limit = kDefaultBruteForceLimit);

}  // namespace pkp

#endif  // PKP_EXACT_H_
