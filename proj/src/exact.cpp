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

#include "teleosched/exact.hpp"

#include <algorithm>
#include <chrono>

#include "teleosched/errors.hpp"
#include "teleosched/evaluate.hpp"

namespace teleosched {
namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const Instance& instance;
  const int num_robots;
  const int num_operators;

  // alpha_prefix[k][j]: autonomous time of tasks before j.
  // faster_suffix[k][j]: sum over i >= j of min(alpha, beta).
  // alpha_suffix[k][j]: sum over i >= j of alpha.
  std::vector<std::vector<Time>> alpha_prefix;
  std::vector<std::vector<Time>> faster_suffix;
  std::vector<std::vector<Time>> alpha_suffix;

  std::vector<int> next;
  std::vector<Time> ready;
  std::vector<Time> op_free;
  int ops_used = 0;
  std::vector<std::pair<TaskRef, int>> entries;

  Time best = Time::infinite();
  std::vector<std::pair<TaskRef, int>> best_entries;
  std::uint64_t nodes = 0;
  std::vector<std::pair<std::uint64_t, Time>> trace;
  Clock::time_point deadline;
  bool timed_out = false;

  Search(const Instance& inst, int operators, Clock::time_point stop)
      : instance(inst),
        num_robots(inst.robots()),
        num_operators(operators),
        next(num_robots, 0),
        ready(num_robots),
        op_free(operators),
        deadline(stop) {
    alpha_prefix.resize(num_robots);
    faster_suffix.resize(num_robots);
    alpha_suffix.resize(num_robots);
    for (int k = 0; k < num_robots; ++k) {
      const auto& tasks = inst.missions[k].tasks;
      const int n = static_cast<int>(tasks.size());
      alpha_prefix[k].resize(n + 1);
      faster_suffix[k].resize(n + 1);
      alpha_suffix[k].resize(n + 1);
      for (int j = 0; j < n; ++j) {
        alpha_prefix[k][j + 1] = alpha_prefix[k][j] + tasks[j].autonomous;
      }
      for (int j = n - 1; j >= 0; --j) {
        const Task& t = tasks[j];
        alpha_suffix[k][j] = alpha_suffix[k][j + 1] + t.autonomous;
        faster_suffix[k][j] =
            faster_suffix[k][j + 1] +
            (t.teleoperated < t.autonomous ? t.teleoperated : t.autonomous);
      }
    }
  }

  void dfs() {
    ++nodes;
    if ((nodes & 1023) == 0 && Clock::now() >= deadline) {
      timed_out = true;
      return;
    }

    // Closing here runs every remaining task autonomously; that is a
    // feasible schedule and keeps the incumbent anytime-fresh.
    Time close_value = Time::zero();
    Time bound = Time::zero();
    for (int k = 0; k < num_robots; ++k) {
      close_value = max(close_value, ready[k] + alpha_suffix[k][next[k]]);
      bound = max(bound, ready[k] + faster_suffix[k][next[k]]);
    }
    if (close_value < best) {
      best = close_value;
      best_entries = entries;
      trace.emplace_back(nodes, best);
    }
    if (bound >= best) return;

    for (int k = 0; k < num_robots && !timed_out; ++k) {
      const auto& tasks = instance.missions[k].tasks;
      const int saved_next = next[k];
      const Time saved_ready = ready[k];
      for (int j = saved_next; j < static_cast<int>(tasks.size()); ++j) {
        const Task& task = tasks[j];
        if (!(task.teleoperated < task.autonomous)) continue;
        const Time robot_ready =
            saved_ready + (alpha_prefix[k][j] - alpha_prefix[k][saved_next]);
        const Time auto_finish = robot_ready + task.autonomous;
        // Identical operators: trying indices beyond the first unused one
        // only permutes the solution.
        const int op_limit = std::min(num_operators, ops_used + 1);
        for (int m = 0; m < op_limit; ++m) {
          const Time start = max(robot_ready, op_free[m]);
          const Time finish = start + task.teleoperated;
          // If waiting eats the whole saving, dropping the entry is never
          // worse; that schedule lives in a sibling subtree.
          if (finish >= auto_finish) continue;

          const Time saved_free = op_free[m];
          const int saved_ops = ops_used;
          next[k] = j + 1;
          ready[k] = finish;
          op_free[m] = finish;
          ops_used = std::max(ops_used, m + 1);
          entries.push_back({TaskRef{k, j}, m});
          dfs();
          entries.pop_back();
          ops_used = saved_ops;
          op_free[m] = saved_free;
          ready[k] = saved_ready;
          next[k] = saved_next;
          if (timed_out) return;
        }
      }
    }
  }
};

ExactSolution run_search(const Instance& instance, double time_limit_seconds) {
  if (time_limit_seconds <= 0) {
    throw InvalidArgument("time limit must be positive");
  }
  instance.validate();

  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(time_limit_seconds));
  Search search(instance, instance.operators, deadline);
  search.dfs();

  ExactSolution solution;
  solution.schedules.resize(instance.operators);
  for (const auto& [ref, op] : search.best_entries) {
    solution.schedules[op].entries.push_back(ref);
  }
  solution.makespan = search.best;
  solution.proved_optimal = !search.timed_out;
  solution.nodes_explored = search.nodes;
  solution.incumbents = std::move(search.trace);
  return solution;
}

}  // namespace

int ExactSolution::operator_of(TaskRef ref) const {
  for (std::size_t m = 0; m < schedules.size(); ++m) {
    for (const TaskRef entry : schedules[m].entries) {
      if (entry == ref) return static_cast<int>(m) + 1;
    }
  }
  return 0;
}

ExactSolution solve_exact(const Instance& instance,
                          double time_limit_seconds) {
  if (instance.operators != 1) {
    throw InvalidArgument(
        "solve_exact handles single-operator instances; use "
        "solve_exact_multi");
  }
  return run_search(instance, time_limit_seconds);
}

ExactSolution solve_exact_multi(const Instance& instance,
                                double time_limit_seconds) {
  if (instance.operators < 2) {
    throw InvalidArgument("solve_exact_multi requires operators >= 2");
  }
  return run_search(instance, time_limit_seconds);
}

Time partial_schedule_lower_bound(const Instance& instance,
                                  const Schedule& partial) {
  instance.validate();
  validate_schedule(instance, partial);

  std::vector<int> next(instance.robots(), 0);
  std::vector<Time> ready(instance.robots());
  Time op_free = Time::zero();
  for (const TaskRef ref : partial.entries) {
    for (int& j = next[ref.robot]; j < ref.task; ++j) {
      ready[ref.robot] += instance.missions[ref.robot].tasks[j].autonomous;
    }
    const Time start = max(ready[ref.robot], op_free);
    const Time finish = start + instance.task(ref).teleoperated;
    ready[ref.robot] = finish;
    op_free = finish;
    next[ref.robot] = ref.task + 1;
  }

  Time bound = Time::zero();
  for (int k = 0; k < instance.robots(); ++k) {
    Time remainder = Time::zero();
    for (int j = next[k]; j < instance.tasks(k); ++j) {
      const Task& t = instance.missions[k].tasks[j];
      remainder +=
          t.teleoperated < t.autonomous ? t.teleoperated : t.autonomous;
    }
    bound = max(bound, ready[k] + remainder);
  }
  return bound;
}

}  // namespace teleosched
