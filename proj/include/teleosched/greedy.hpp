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

#ifndef TELEOSCHED_GREEDY_HPP
#define TELEOSCHED_GREEDY_HPP

#include <cstdint>

#include "teleosched/types.hpp"

namespace teleosched {

// Idle-time threshold for treating a schedule entry as blocked. kMinTeleop
// uses the smallest teleoperation time in the instance: a gap shorter than
// that cannot host any insertion without delaying later entries.
enum class EpsilonPolicy { kZero, kMinTeleop, kFixed };

struct GreedyConfig {
  EpsilonPolicy epsilon_policy = EpsilonPolicy::kZero;
  Time epsilon;                      // used by kFixed; must be >= 0
  std::int64_t max_iterations = 0;   // anytime cap on improvement steps;
                                     // 0 = run to the fixed point
};

// The threshold the config resolves to for this instance.
Time blocking_threshold(const Instance& instance, const GreedyConfig& config);

// One insertion round: among the robots whose mission finish equals the
// makespan, finds the task and sequence position whose insertion cuts
// that robot's finish time the most without increasing the makespan.
// Returns the input unchanged when no insertion qualifies. Ties break to
// the lowest robot index, then lowest task index, then lowest position.
Schedule greedy_insertion_step(const Instance& instance,
                               const Schedule& schedule,
                               const GreedyConfig& config = {});

// One block-removal round: scanning blocked entries by start time
// descending, inserts an unscheduled earlier task of the blocked entry's
// robot so that the entry starts strictly earlier and the makespan does
// not increase. Accepts the first improving insertion; returns the input
// unchanged when none exists.
Schedule block_removal_step(const Instance& instance,
                            const Schedule& schedule,
                            const GreedyConfig& config = {});

// Alternates insertion rounds with block-removal rounds, starting from
// the empty schedule, until neither changes the schedule. The makespan is
// non-increasing across rounds and at most total_tasks() insertions
// occur, so with max_iterations set the current schedule is also the best
// one seen.
Schedule iterative_greedy(const Instance& instance,
                          const GreedyConfig& config = {});

// Same loop seeded with an existing schedule, e.g. the output of one of
// the baseline heuristics. When `steps` is non-null it receives the
// number of schedule changes performed.
Schedule iterative_greedy_from(const Instance& instance, Schedule start,
                               const GreedyConfig& config = {},
                               std::uint64_t* steps = nullptr);

// Baseline: keep appending the makespan robot's next not-yet-started
// task, with whoever is late waiting, while that lowers the makespan.
Schedule naive_greedy(const Instance& instance);

// Baseline: at the operator's free time T, look at the task the makespan
// robot is executing. Append either that task (the plan then has the
// robot wait at the task's start for the operator) or, when the robot is
// mid-task, its successor (the operator waits the task out), whichever
// gives the lower makespan; repeat while that lowers the makespan. On a
// single robot every decision falls on a task boundary, so this reduces
// to naive_greedy.
Schedule comparison_greedy(const Instance& instance);

}  // namespace teleosched

#endif  // TELEOSCHED_GREEDY_HPP
