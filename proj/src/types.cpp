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

#include "teleosched/types.hpp"

#include <string>

#include "teleosched/errors.hpp"

namespace teleosched {

std::size_t Instance::total_tasks() const {
  std::size_t n = 0;
  for (const Mission& mission : missions) n += mission.tasks.size();
  return n;
}

void Instance::validate() const {
  if (missions.empty()) {
    throw ValidationError("instance has no robots", "robots");
  }
  if (operators < 1) {
    throw ValidationError("operators must be >= 1", "operators");
  }
  for (int k = 0; k < robots(); ++k) {
    const Mission& mission = missions[k];
    const std::string robot_field = "robots[" + std::to_string(k) + "]";
    if (mission.tasks.empty()) {
      throw ValidationError("mission of robot " + std::to_string(k + 1) +
                                " is empty",
                            robot_field);
    }
    for (int j = 0; j < tasks(k); ++j) {
      const Task& task = mission.tasks[j];
      const std::string task_field =
          robot_field + "[" + std::to_string(j) + "]";
      if (task.autonomous <= Time::zero()) {
        throw ValidationError("alpha must be positive at " + task_field,
                              task_field + ".alpha");
      }
      if (task.teleoperated <= Time::zero()) {
        throw ValidationError("beta must be positive at " + task_field,
                              task_field + ".beta");
      }
    }
  }
}

void validate_schedule(const Instance& instance, const Schedule& schedule) {
  std::vector<int> last_index(instance.robots(), -1);
  for (std::size_t pos = 0; pos < schedule.entries.size(); ++pos) {
    const TaskRef ref = schedule.entries[pos];
    const std::string where = "entry " + std::to_string(pos + 1);
    if (ref.robot < 0 || ref.robot >= instance.robots()) {
      throw ValidationError(where + ": robot index out of range");
    }
    if (ref.task < 0 || ref.task >= instance.tasks(ref.robot)) {
      throw ValidationError(where + ": task index out of range for robot " +
                            std::to_string(ref.robot + 1));
    }
    if (ref.task <= last_index[ref.robot]) {
      throw ValidationError(where + ": duplicates or reorders tasks of robot " +
                            std::to_string(ref.robot + 1));
    }
    last_index[ref.robot] = ref.task;
  }
}

}  // namespace teleosched
