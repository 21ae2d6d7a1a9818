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

#include "pkp/solve.h"

#include <algorithm>
#include <string>

#include "pkp/exact.h"
#include "pkp/fptas.h"
#include "pkp/status.h"

namespace pkp {

const char* AlgorithmName(Algorithm algo) {
  switch (algo) {
    case Algorithm::kExact:
      return "exact";
    case Algorithm::kFptas:
      return "fptas";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kBrute:
      return "brute";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "exact") return Algorithm::kExact;
  if (name == "fptas") return Algorithm::kFptas;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "brute") return Algorithm::kBrute;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown algorithm '" + std::string(name) + "'");
}

SolveOutcome SolveRaw(const Instance& raw, Algorithm algo,
                      const std::optional<Rational>& eps) {
  if (algo == Algorithm::kFptas) {
    if (!eps) {
      throw Error(ErrorCode::kInvalidArgument, "fptas requires eps");
    }
    if (!eps->LessThanOne()) {
      throw Error(ErrorCode::kEpsOutOfRange,
                  "eps must lie in (0, 1), got " + eps->ToString());
    }
  }
  Preprocessed pre = EnforceAssumptions(raw);
  SolveOutcome outcome;
  Solution local;
  if (!pre.instance.empty()) {
    switch (algo) {
      case Algorithm::kExact:
        local = SolveExactDp(pre.instance);
        break;
      case Algorithm::kFptas:
        local = SolveFptas(pre.instance, *eps);
        break;
      case Algorithm::kGreedy: {
        GreedyResult g = SolveGreedy(pre.instance);
        local = std::move(g.solution);
        outcome.trace = std::move(g.trace);
        break;
      }
      case Algorithm::kBrute:
        local = SolveBruteForce(pre.instance);
        break;
    }
  } else if (algo == Algorithm::kGreedy) {
    outcome.trace = GreedyTrace{};
  }

  Solution& out = outcome.solution;
  for (std::size_t k : local.indices) out.indices.push_back(pre.original_index[k]);
  out.indices.insert(out.indices.end(), pre.forced.begin(), pre.forced.end());
  std::sort(out.indices.begin(), out.indices.end());
  out.value = Evaluate(raw, out.indices);
  out.forced_items = std::move(pre.forced);
  outcome.original_index = std::move(pre.original_index);
  return outcome;
}

}  // namespace pkp
