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

#include "teleosched/greedy.hpp"

#include <utility>
#include <vector>

#include "sequence_sim.hpp"
#include "teleosched/errors.hpp"
#include "teleosched/evaluate.hpp"

namespace teleosched {
namespace {

std::vector<std::vector<char>> scheduled_flags(const Instance& instance,
                                               const Schedule& schedule) {
  std::vector<std::vector<char>> flags(instance.robots());
  for (int k = 0; k < instance.robots(); ++k) {
    flags[k].assign(instance.tasks(k), 0);
  }
  for (const TaskRef ref : schedule.entries) flags[ref.robot][ref.task] = 1;
  return flags;
}

// Sequence positions where `ref` may be inserted without reordering its
// robot's tasks: everything after the last earlier-index entry and up to
// (just before) the first later-index entry of the same robot.
std::pair<int, int> insert_range(const std::vector<TaskRef>& entries,
                                 TaskRef ref) {
  int lo = 0;
  int hi = static_cast<int>(entries.size());
  for (int p = 0; p < static_cast<int>(entries.size()); ++p) {
    if (entries[p].robot != ref.robot) continue;
    if (entries[p].task < ref.task) {
      lo = p + 1;
    } else {
      hi = p;
      break;
    }
  }
  return {lo, hi};
}

std::vector<TaskRef> with_insertion(const std::vector<TaskRef>& entries,
                                    int pos, TaskRef ref) {
  std::vector<TaskRef> out;
  out.reserve(entries.size() + 1);
  out.insert(out.end(), entries.begin(), entries.begin() + pos);
  out.push_back(ref);
  out.insert(out.end(), entries.begin() + pos, entries.end());
  return out;
}

// Captures the start time of one watched entry during a run.
struct WatchHooks {
  TaskRef watch;
  Time start;

  void autonomous_task(TaskRef, Time, Time) {}
  void teleoperated_task(TaskRef ref, std::size_t, Time, Time s, Time) {
    if (ref == watch) start = s;
  }
};

bool teleoperation_helps(const Task& task) {
  return task.teleoperated < task.autonomous;
}

}  // namespace

Time blocking_threshold(const Instance& instance, const GreedyConfig& config) {
  switch (config.epsilon_policy) {
    case EpsilonPolicy::kZero:
      return Time::zero();
    case EpsilonPolicy::kMinTeleop: {
      Time lowest = Time::infinite();
      for (const Mission& mission : instance.missions) {
        for (const Task& task : mission.tasks) {
          lowest = lowest < task.teleoperated ? lowest : task.teleoperated;
        }
      }
      return lowest;
    }
    case EpsilonPolicy::kFixed:
      if (config.epsilon < Time::zero()) {
        throw InvalidArgument("fixed epsilon must be >= 0");
      }
      return config.epsilon;
  }
  throw InvalidArgument("unknown epsilon policy");
}

Schedule greedy_insertion_step(const Instance& instance,
                               const Schedule& schedule,
                               const GreedyConfig&) {
  instance.validate();
  validate_schedule(instance, schedule);

  detail::SequenceSim sim(instance);
  const Time mu = sim.run(schedule.entries);
  const std::vector<Time> finishes(sim.mission_finishes().begin(),
                                   sim.mission_finishes().end());
  const auto scheduled = scheduled_flags(instance, schedule);

  Time best_reduction = Time::zero();
  std::vector<TaskRef> best;
  bool found = false;

  for (int k = 0; k < instance.robots(); ++k) {
    if (finishes[k] != mu) continue;  // not a makespan robot
    for (int j = 0; j < instance.tasks(k); ++j) {
      if (scheduled[k][j]) continue;
      const TaskRef ref{k, j};
      if (!teleoperation_helps(instance.task(ref))) continue;
      const auto [lo, hi] = insert_range(schedule.entries, ref);
      for (int pos = lo; pos <= hi; ++pos) {
        auto candidate = with_insertion(schedule.entries, pos, ref);
        const Time mu2 = sim.run(candidate);
        if (mu2 > mu) continue;
        const Time reduction = finishes[k] - sim.mission_finishes()[k];
        if (reduction > best_reduction) {
          best_reduction = reduction;
          best = std::move(candidate);
          found = true;
        }
      }
    }
  }
  return found ? Schedule{std::move(best)} : schedule;
}

Schedule block_removal_step(const Instance& instance, const Schedule& schedule,
                            const GreedyConfig& config) {
  const Time epsilon = blocking_threshold(instance, config);
  const BlockingReport report = find_blocking(instance, schedule, epsilon);
  if (report.blocks.empty()) return schedule;

  detail::SequenceSim sim(instance);
  const Time mu = sim.run(schedule.entries);
  const auto scheduled = scheduled_flags(instance, schedule);

  for (const Block& block : report.blocks) {
    const int k = block.robot;
    // Only unscheduled tasks preceding the blocked entry in its robot's
    // mission can move that entry's start.
    for (int i = 0; i < block.task.task; ++i) {
      if (scheduled[k][i]) continue;
      const TaskRef ref{k, i};
      if (!teleoperation_helps(instance.task(ref))) continue;
      const auto [lo, hi] = insert_range(schedule.entries, ref);
      for (int pos = lo; pos <= hi; ++pos) {
        auto candidate = with_insertion(schedule.entries, pos, ref);
        WatchHooks watch{block.task, Time::zero()};
        const Time mu2 = sim.run(std::span<const TaskRef>(candidate), watch);
        if (mu2 <= mu && watch.start < block.start) {
          return Schedule{std::move(candidate)};
        }
      }
    }
  }
  return schedule;
}

Schedule iterative_greedy(const Instance& instance,
                          const GreedyConfig& config) {
  return iterative_greedy_from(instance, Schedule{}, config);
}

Schedule iterative_greedy_from(const Instance& instance, Schedule start,
                               const GreedyConfig& config,
                               std::uint64_t* steps) {
  instance.validate();
  validate_schedule(instance, start);

  Schedule current = std::move(start);
  std::int64_t changes = 0;
  for (;;) {
    if (config.max_iterations > 0 && changes >= config.max_iterations) break;
    Schedule next = greedy_insertion_step(instance, current, config);
    if (next == current) {
      next = block_removal_step(instance, current, config);
      if (next == current) break;
    }
    current = std::move(next);
    ++changes;
  }
  if (steps != nullptr) *steps = static_cast<std::uint64_t>(changes);
  return current;
}

Schedule naive_greedy(const Instance& instance) {
  instance.validate();
  detail::SequenceSim sim(instance);

  Schedule schedule;
  for (;;) {
    const Timeline tl = evaluate(instance, schedule);
    const Time op_free = tl.operator_busy[0].empty()
                             ? Time::zero()
                             : tl.operator_busy[0].back().finish;
    int makespan_robot = 0;
    for (int k = 0; k < instance.robots(); ++k) {
      if (tl.finish[k].back() == tl.makespan) {
        makespan_robot = k;
        break;
      }
    }

    // The robot's next not-yet-started task; a task starting exactly at
    // op_free has not started and may still be teleoperated.
    int next_task = -1;
    for (int j = 0; j < instance.tasks(makespan_robot); ++j) {
      if (tl.start[makespan_robot][j] >= op_free) {
        next_task = j;
        break;
      }
    }
    if (next_task < 0) break;

    Schedule candidate = schedule;
    candidate.entries.push_back({makespan_robot, next_task});
    if (sim.run(candidate.entries) < tl.makespan) {
      schedule = std::move(candidate);
    } else {
      break;
    }
  }
  return schedule;
}

Schedule comparison_greedy(const Instance& instance) {
  instance.validate();
  detail::SequenceSim sim(instance);

  Schedule schedule;
  for (;;) {
    const Timeline tl = evaluate(instance, schedule);
    const Time op_free = tl.operator_busy[0].empty()
                             ? Time::zero()
                             : tl.operator_busy[0].back().finish;
    int makespan_robot = 0;
    for (int k = 0; k < instance.robots(); ++k) {
      if (tl.finish[k].back() == tl.makespan) {
        makespan_robot = k;
        break;
      }
    }

    // Task the makespan robot is executing (or about to start) when the
    // operator comes free.
    int executing = -1;
    for (int j = 0; j < instance.tasks(makespan_robot); ++j) {
      if (tl.finish[makespan_robot][j] > op_free) {
        executing = j;
        break;
      }
    }
    if (executing < 0) break;

    Time best_makespan = Time::infinite();
    Schedule best;
    const auto consider = [&](int task) {
      Schedule candidate = schedule;
      candidate.entries.push_back({makespan_robot, task});
      const Time mu2 = sim.run(candidate.entries);
      if (mu2 < best_makespan) {
        best_makespan = mu2;
        best = std::move(candidate);
      }
    };
    // Appending the task at hand re-plans it as teleoperated from its
    // start, with the robot waiting for the operator; the realized
    // timeline never switches a running task's mode.
    consider(executing);
    // The wait-out-the-task alternative only exists mid-task; at a clean
    // boundary there is nothing to wait for.
    if (tl.start[makespan_robot][executing] < op_free &&
        executing + 1 < instance.tasks(makespan_robot)) {
      consider(executing + 1);
    }

    if (best_makespan >= tl.makespan) break;
    schedule = std::move(best);
  }
  return schedule;
}

}  // namespace teleosched
