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

#ifndef TELEOSCHED_LP_HPP
#define TELEOSCHED_LP_HPP

#include <string>

#include "teleosched/types.hpp"

namespace teleosched {

// Mixed-integer model of the scheduling problem in CPLEX LP text format,
// for cross-validation with external solvers.
//
// Variables: `mu` (objective), start times `t_k_j`, teleoperation
// binaries `x_k_j` (`x_k_j_m` per operator when operators >= 2), and one
// auxiliary binary `y_k_j_l_i` (`..._m`) per cross-robot task pair and
// operator, linearizing the either-or operator-exclusivity disjunction
// with big-M = total autonomous time. Pairs range over k < l only.
// Finish times are substituted inline, so constraints read
//   mu >= t + alpha - (alpha - beta) x        (mission completion)
//   t_j >= t_{j-1} + alpha - (alpha - beta) x (mission order)
// plus the two big-M rows per pair. Indices are 1-based and the output is
// deterministic, so emissions can be compared against golden files.
std::string emit_lp(const Instance& instance);

}  // namespace teleosched

#endif  // TELEOSCHED_LP_HPP
