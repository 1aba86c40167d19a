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

#ifndef TELEOSCHED_SOLVERS_HPP
#define TELEOSCHED_SOLVERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "teleosched/greedy.hpp"
#include "teleosched/types.hpp"

namespace teleosched {

struct SolveOptions {
  double time_limit_seconds = 60.0;  // exact search only
  GreedyConfig greedy;
};

struct SolveResult {
  std::vector<Schedule> schedules;  // one per operator
  Time makespan;
  bool proved_optimal = false;
  std::uint64_t steps = 0;  // greedy improvement steps or search nodes

  const Schedule& schedule() const { return schedules.front(); }
};

// Registered names: iterative-greedy, greedy-insertion, block-removal,
// naive-greedy, comparison-greedy, naive+iterative, comparison+iterative
// (a greedy seed refined by the iterative loop), and exact.
std::vector<std::string> solver_names();

// Runs the named solver. Throws InvalidArgument for unknown names and for
// heuristic solvers on multi-operator instances (only `exact` supports
// operators >= 2).
SolveResult run_solver(const Instance& instance, std::string_view name,
                       const SolveOptions& options = {});

}  // namespace teleosched

#endif  // TELEOSCHED_SOLVERS_HPP
