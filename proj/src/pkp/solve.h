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

#ifndef PKP_SOLVE_H_
#define PKP_SOLVE_H_

#include <optional>
#include <string_view>

#include "pkp/core.h"
#include "pkp/greedy.h"
#include "pkp/numerics.h"

namespace pkp {

enum class Algorithm { kExact, kFptas, kGreedy, kBrute };

const char* AlgorithmName(Algorithm algo);
// Throws Error(kInvalidArgument) for unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct SolveOutcome {
  // Indices and value refer to the raw instance and include forced items.
  Solution solution;
  // Present for Algorithm::kGreedy; indices refer to the preprocessed items.
  std::optional<GreedyTrace> trace;
  // original_index of the preprocessed instance, to read the trace.
  std::vector<std::size_t> original_index;
};

// Preprocesses `raw`, runs the chosen solver and maps the answer back to raw
// indices. `eps` is required for kFptas (Error(kInvalidArgument) otherwise)
// and ignored by the other algorithms.
SolveOutcome SolveRaw(const Instance& raw, Algorithm algo,
                      const std::optional<Rational>& eps = std::nullopt);

}  // namespace pkp

#endif  // PKP_SOLVE_H_
