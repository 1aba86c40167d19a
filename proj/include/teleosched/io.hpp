// Copyright 2026 The teleosched Authors
//
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

#ifndef TELEOSCHED_IO_HPP
#define TELEOSCHED_IO_HPP

#include <string>
#include <string_view>

#include "teleosched/types.hpp"

namespace teleosched {

// Instance file format: a JSON object with "operators" (integer >= 1) and
// "robots" (array of missions); each mission is an array of task objects
// {"alpha": "<2dp>", "beta": "<2dp>"}. Durations may be given as numbers
// or as decimal strings with at most two fractional digits.
//
// Throws ParseError (with line/column) on malformed text and
// ValidationError (naming the field) on invariant violations.
Instance load_instance(std::string_view text);

// Canonical serialization: sorted keys, durations rendered as strings
// with exactly two fractional digits, two-space indent, newline
// terminated. load_instance(save_instance(i)) is the identity.
std::string save_instance(const Instance& instance);

}  // namespace teleosched

#endif  // TELEOSCHED_IO_HPP
