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

#ifndef TELEOSCHED_TYPES_HPP
#define TELEOSCHED_TYPES_HPP

#include <cstddef>
#include <vector>

#include "teleosched/time.hpp"

namespace teleosched {

// One unit of a robot mission. Teleoperation is normally at least as
// fast as autonomous operation, but tasks with teleoperated >=
// autonomous are legal; solvers simply never select them.
struct Task {
  Time autonomous;
  Time teleoperated;
};

// Identifies a task by robot and mission position, both zero-based.
struct TaskRef {
  int robot = 0;
  int task = 0;
  friend constexpr auto operator<=>(const TaskRef&, const TaskRef&) = default;
};

// A robot's fixed, ordered task sequence.
struct Mission {
  std::vector<Task> tasks;
};

struct Instance {
  std::vector<Mission> missions;
  int operators = 1;

  int robots() const { return static_cast<int>(missions.size()); }
  int tasks(int robot) const {
    return static_cast<int>(missions[robot].tasks.size());
  }
  std::size_t total_tasks() const;
  const Task& task(TaskRef ref) const {
    return missions[ref.robot].tasks[ref.task];
  }

  // Throws ValidationError on an empty fleet, an empty mission,
  // non-positive durations, or operators < 1.
  void validate() const;
};

// The teleoperation sequence, served strictly in order by one operator.
struct Schedule {
  std::vector<TaskRef> entries;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Checks that entries are in range, duplicate-free, and that entries of
// the same robot appear in mission order. Throws ValidationError.
void validate_schedule(const Instance& instance, const Schedule& schedule);

}  // namespace teleosched

#endif  // TELEOSCHED_TYPES_HPP
