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

#ifndef TELEOSCHED_EVALUATE_HPP
#define TELEOSCHED_EVALUATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "teleosched/types.hpp"

namespace teleosched {

struct OperatorInterval {
  TaskRef task;
  Time start;
  Time finish;
};

// Operator gap preceding a schedule entry. `preceding` is the 1-based
// position of the previous entry of that operator; 0 means the gap runs
// from the mission start.
struct IdleGap {
  int op = 1;
  int preceding = 0;
  Time start;
  Time length;
};

// The evaluated consequence of a schedule: when every task starts and
// finishes, what the operators do, and the resulting makespan.
struct Timeline {
  std::vector<std::vector<Time>> start;       // [robot][task]
  std::vector<std::vector<Time>> finish;      // [robot][task]
  std::vector<std::vector<int>> served_by;    // 0 = autonomous, else operator
  std::vector<std::vector<OperatorInterval>> operator_busy;  // [operator]
  std::vector<IdleGap> idle_gaps;             // positive gaps, serving order
  Time makespan;
  std::size_t visited_tasks = 0;              // single-pass contract

  Time start_of(TaskRef ref) const { return start[ref.robot][ref.task]; }
  Time finish_of(TaskRef ref) const { return finish[ref.robot][ref.task]; }
};

// Earliest-start timing of a schedule: a robot runs its mission in order,
// starting each unscheduled task as soon as the previous one finishes; a
// scheduled task starts when both its robot and the operator are free,
// and the operator serves entries strictly in sequence order. O(total
// tasks). Throws ValidationError on an invalid schedule.
Timeline evaluate(const Instance& instance, const Schedule& schedule);

// Multi-operator variant: one serving sequence per operator. Entries of
// the same robot must be mutually orderable across operators; otherwise
// the schedules deadlock and a ValidationError is thrown.
Timeline evaluate(const Instance& instance,
                  const std::vector<Schedule>& per_operator);

Time makespan(const Instance& instance, const Schedule& schedule);

// max over robots of the all-autonomous mission time; equals the
// makespan of the empty schedule.
Time all_autonomous_makespan(const Instance& instance);

struct Block {
  TaskRef task;   // the blocked entry
  int robot = 0;  // its robot (the blocking robot)
  Time gap;       // operator idle time directly before it
  Time start;     // its start time
};

// Every schedule entry preceded by operator idle time greater than
// epsilon (for the first entry, its start time counts as the gap),
// sorted by start time descending.
struct BlockingReport {
  std::vector<Block> blocks;
};

BlockingReport find_blocking(const Instance& instance,
                             const Schedule& schedule, Time epsilon);

// CSV export: header line, one row per task, then one row per operator
// interval. Times rendered with two decimals; indices 1-based.
std::string timeline_to_csv(const Timeline& timeline);

}  // namespace teleosched

#endif  // TELEOSCHED_EVALUATE_HPP
