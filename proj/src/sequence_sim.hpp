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

#ifndef TELEOSCHED_SRC_SEQUENCE_SIM_HPP
#define TELEOSCHED_SRC_SEQUENCE_SIM_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "teleosched/types.hpp"

namespace teleosched::detail {

// Shared single-operator timing loop. The evaluator records a full
// Timeline through the hooks; the greedy candidate loops run it with
// no-op hooks and read only the mission finish times. Buffers are reused
// across run() calls, which matters in the candidate loops.
//
// Hooks must provide:
//   void autonomous_task(TaskRef, Time start, Time finish);
//   void teleoperated_task(TaskRef, std::size_t position, Time gap,
//                          Time start, Time finish);
class SequenceSim {
 public:
  explicit SequenceSim(const Instance& instance)
      : instance_(instance),
        next_(instance.robots(), 0),
        ready_(instance.robots()) {}

  struct NoHooks {
    void autonomous_task(TaskRef, Time, Time) {}
    void teleoperated_task(TaskRef, std::size_t, Time, Time, Time) {}
  };

  Time run(std::span<const TaskRef> entries) {
    NoHooks hooks;
    return run(entries, hooks);
  }

  template <class Hooks>
  Time run(std::span<const TaskRef> entries, Hooks& hooks) {
    std::fill(next_.begin(), next_.end(), 0);
    std::fill(ready_.begin(), ready_.end(), Time::zero());

    Time op_free = Time::zero();
    for (std::size_t pos = 0; pos < entries.size(); ++pos) {
      const TaskRef ref = entries[pos];
      advance_autonomously(ref.robot, ref.task, hooks);
      const Time start = max(ready_[ref.robot], op_free);
      const Time finish = start + instance_.task(ref).teleoperated;
      hooks.teleoperated_task(ref, pos, start - op_free, start, finish);
      ready_[ref.robot] = finish;
      next_[ref.robot] = ref.task + 1;
      op_free = finish;
    }

    Time result = Time::zero();
    for (int k = 0; k < instance_.robots(); ++k) {
      advance_autonomously(k, instance_.tasks(k), hooks);
      result = max(result, ready_[k]);
    }
    return result;
  }

  // Valid after run(): finish time of each robot's last task.
  std::span<const Time> mission_finishes() const { return ready_; }

 private:
  template <class Hooks>
  void advance_autonomously(int robot, int until, Hooks& hooks) {
    int& j = next_[robot];
    Time& t = ready_[robot];
    const Mission& mission = instance_.missions[robot];
    for (; j < until; ++j) {
      const Time finish = t + mission.tasks[j].autonomous;
      hooks.autonomous_task(TaskRef{robot, j}, t, finish);
      t = finish;
    }
  }

  const Instance& instance_;
  std::vector<int> next_;
  std::vector<Time> ready_;
};

}  // namespace teleosched::detail

#endif  // TELEOSCHED_SRC_SEQUENCE_SIM_HPP
