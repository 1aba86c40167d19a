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

#ifndef TELEOSCHED_EXACT_HPP
#define TELEOSCHED_EXACT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "teleosched/types.hpp"

namespace teleosched {

struct ExactSolution {
  std::vector<Schedule> schedules;  // one per operator
  Time makespan;
  bool proved_optimal = false;
  std::uint64_t nodes_explored = 0;
  // Incumbent improvements as (nodes explored, makespan); non-increasing
  // in the second component.
  std::vector<std::pair<std::uint64_t, Time>> incumbents;

  // Single-operator convenience.
  const Schedule& schedule() const { return schedules.front(); }

  // 1-based serving operator of a task, 0 when it runs autonomously.
  int operator_of(TaskRef ref) const;
};

// Depth-first branch and bound over teleoperation sequences: each node
// either closes the schedule (remaining tasks run autonomously) or
// appends some robot's next unscheduled, not-yet-passed task, pruning
// when max over robots of (current readiness + faster-duration remainder)
// reaches the incumbent. Exhausting the tree within the time limit proves
// optimality; otherwise the best incumbent is returned. Intended for
// instances up to roughly 25 tasks. Throws InvalidArgument when
// time_limit_seconds <= 0 or the instance has more than one operator.
ExactSolution solve_exact(const Instance& instance, double time_limit_seconds);

// Multi-operator variant (instance.operators >= 2): branching also picks
// the serving operator, with interchangeable operator indices broken by
// never using more than one fresh operator at a time.
ExactSolution solve_exact_multi(const Instance& instance,
                                double time_limit_seconds);

// Admissible completion bound for a partial schedule: no finish time can
// beat running every remaining task at its faster duration with no
// operator contention. Exposed for the bound-admissibility tests.
Time partial_schedule_lower_bound(const Instance& instance,
                                  const Schedule& partial);

}  // namespace teleosched

#endif  // TELEOSCHED_EXACT_HPP
