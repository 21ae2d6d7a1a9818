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

// Instance serialization.
//
// JSON:  {"capacity": <int>, "items": [{"profit": <int>, "weight": <int>}, ...]}
// Text:  first line "n C", then n lines "p_j w_j".
//
// The writers emit exactly the layouts above (single line JSON with ", " and
// ": " separators, trailing newline), so parse followed by serialize is
// byte-identical for writer output.

#ifndef PKP_INSTANCE_IO_H_
#define PKP_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "pkp/core.h"

namespace pkp {

// Dispatches on the first non-blank character: '{' selects JSON, anything
// else the text format. Throws Error(kParseError).
Instance ParseInstance(std::string_view text);
Instance ParseInstanceJson(std::string_view text);
Instance ParseInstanceText(std::string_view text);

std::string InstanceToJson(const Instance& instance);
std::string InstanceToText(const Instance& instance);

// Reads a whole file; throws Error(kIoError).
std::string ReadFile(const std::string& path);

}  // namespace pkp

#endif  // PKP_INSTANCE_IO_H_
