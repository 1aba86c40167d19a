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

#include "teleosched/evaluate.hpp"

#include <algorithm>
#include <utility>

#include "sequence_sim.hpp"
#include "teleosched/errors.hpp"

namespace teleosched {
namespace {

Timeline make_empty_timeline(const Instance& instance, int operators) {
  Timeline tl;
  tl.start.resize(instance.robots());
  tl.finish.resize(instance.robots());
  tl.served_by.resize(instance.robots());
  for (int k = 0; k < instance.robots(); ++k) {
    tl.start[k].resize(instance.tasks(k));
    tl.finish[k].resize(instance.tasks(k));
    tl.served_by[k].assign(instance.tasks(k), 0);
  }
  tl.operator_busy.resize(operators);
  return tl;
}

struct TimelineHooks {
  Timeline& tl;
  int op;  // 1-based operator receiving the teleoperated entries

  void autonomous_task(TaskRef ref, Time start, Time finish) {
    tl.start[ref.robot][ref.task] = start;
    tl.finish[ref.robot][ref.task] = finish;
    ++tl.visited_tasks;
  }

  void teleoperated_task(TaskRef ref, std::size_t position, Time gap,
                         Time start, Time finish) {
    tl.start[ref.robot][ref.task] = start;
    tl.finish[ref.robot][ref.task] = finish;
    tl.served_by[ref.robot][ref.task] = op;
    tl.operator_busy[op - 1].push_back({ref, start, finish});
    if (gap > Time::zero()) {
      tl.idle_gaps.push_back(
          {op, static_cast<int>(position), start - gap, gap});
    }
    ++tl.visited_tasks;
  }
};

}  // namespace

Timeline evaluate(const Instance& instance, const Schedule& schedule) {
  instance.validate();
  validate_schedule(instance, schedule);

  Timeline tl = make_empty_timeline(instance, 1);
  TimelineHooks hooks{tl, 1};
  detail::SequenceSim sim(instance);
  tl.makespan = sim.run(schedule.entries, hooks);
  return tl;
}

Timeline evaluate(const Instance& instance,
                  const std::vector<Schedule>& per_operator) {
  instance.validate();
  const int num_ops = static_cast<int>(per_operator.size());
  if (num_ops < 1) throw InvalidArgument("need at least one operator schedule");

  std::vector<TaskRef> all;
  for (const Schedule& schedule : per_operator) {
    validate_schedule(instance, schedule);
    all.insert(all.end(), schedule.entries.begin(), schedule.entries.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ValidationError("a task appears in more than one operator schedule");
  }

  // Each robot's scheduled tasks in mission order, with the serving
  // operator; an operator entry can be timed once it is the robot's next
  // scheduled task.
  std::vector<std::vector<std::pair<int, int>>> robot_sched(
      instance.robots());  // (task index, operator)
  for (int m = 0; m < num_ops; ++m) {
    for (const TaskRef ref : per_operator[m].entries) {
      robot_sched[ref.robot].emplace_back(ref.task, m);
    }
  }
  for (auto& scheduled : robot_sched) {
    std::sort(scheduled.begin(), scheduled.end());
  }

  Timeline tl = make_empty_timeline(instance, num_ops);
  std::vector<int> next(instance.robots(), 0);
  std::vector<Time> ready(instance.robots());
  std::vector<std::size_t> robot_pos(instance.robots(), 0);
  std::vector<std::size_t> op_pos(num_ops, 0);
  std::vector<Time> op_free(num_ops);

  const auto advance = [&](int robot, int until) {
    for (int& j = next[robot]; j < until; ++j) {
      const Time finish = ready[robot] + instance.missions[robot].tasks[j].autonomous;
      tl.start[robot][j] = ready[robot];
      tl.finish[robot][j] = finish;
      ready[robot] = finish;
      ++tl.visited_tasks;
    }
  };

  std::size_t remaining = all.size();
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (int m = 0; m < num_ops; ++m) {
      while (op_pos[m] < per_operator[m].entries.size()) {
        const TaskRef ref = per_operator[m].entries[op_pos[m]];
        const auto& scheduled = robot_sched[ref.robot];
        if (scheduled[robot_pos[ref.robot]] !=
            std::make_pair(ref.task, m)) {
          break;  // robot is owed an earlier entry by another operator
        }
        advance(ref.robot, ref.task);
        const Time start = max(ready[ref.robot], op_free[m]);
        const Time gap = start - op_free[m];
        const Time finish = start + instance.task(ref).teleoperated;
        tl.start[ref.robot][ref.task] = start;
        tl.finish[ref.robot][ref.task] = finish;
        tl.served_by[ref.robot][ref.task] = m + 1;
        tl.operator_busy[m].push_back({ref, start, finish});
        if (gap > Time::zero()) {
          tl.idle_gaps.push_back(
              {m + 1, static_cast<int>(op_pos[m]), start - gap, gap});
        }
        ++tl.visited_tasks;
        ready[ref.robot] = finish;
        next[ref.robot] = ref.task + 1;
        op_free[m] = finish;
        ++op_pos[m];
        ++robot_pos[ref.robot];
        --remaining;
        progress = true;
      }
    }
  }
  if (remaining > 0) {
    throw ValidationError(
        "operator schedules deadlock: entries of one robot are mutually "
        "blocked across operators");
  }

  tl.makespan = Time::zero();
  for (int k = 0; k < instance.robots(); ++k) {
    advance(k, instance.tasks(k));
    tl.makespan = max(tl.makespan, ready[k]);
  }
  return tl;
}

Time makespan(const Instance& instance, const Schedule& schedule) {
  return evaluate(instance, schedule).makespan;
}

Time all_autonomous_makespan(const Instance& instance) {
  Time result = Time::zero();
  for (const Mission& mission : instance.missions) {
    Time total = Time::zero();
    for (const Task& task : mission.tasks) total += task.autonomous;
    result = max(result, total);
  }
  return result;
}

BlockingReport find_blocking(const Instance& instance,
                             const Schedule& schedule, Time epsilon) {
  if (epsilon < Time::zero()) {
    throw InvalidArgument("epsilon must be >= 0");
  }
  const Timeline tl = evaluate(instance, schedule);

  BlockingReport report;
  for (const IdleGap& gap : tl.idle_gaps) {
    if (gap.length <= epsilon) continue;
    const TaskRef ref = schedule.entries[gap.preceding];
    report.blocks.push_back(
        {ref, ref.robot, gap.length, tl.start_of(ref)});
  }
  std::sort(report.blocks.begin(), report.blocks.end(),
            [](const Block& a, const Block& b) { return a.start > b.start; });
  return report;
}

std::string timeline_to_csv(const Timeline& tl) {
  std::string out = "record,robot,task,operator,teleoperated,start,finish\n";
  for (std::size_t k = 0; k < tl.start.size(); ++k) {
    for (std::size_t j = 0; j < tl.start[k].size(); ++j) {
      const int op = tl.served_by[k][j];
      out += "task," + std::to_string(k + 1) + ',' + std::to_string(j + 1) +
             ',' + (op > 0 ? std::to_string(op) : std::string()) + ',' +
             (op > 0 ? "1" : "0") + ',' + tl.start[k][j].str() + ',' +
             tl.finish[k][j].str() + '\n';
    }
  }
  for (std::size_t m = 0; m < tl.operator_busy.size(); ++m) {
    for (const OperatorInterval& iv : tl.operator_busy[m]) {
      out += "operator," + std::to_string(iv.task.robot + 1) + ',' +
             std::to_string(iv.task.task + 1) + ',' + std::to_string(m + 1) +
             ",1," + iv.start.str() + ',' + iv.finish.str() + '\n';
    }
  }
  return out;
}

}  // namespace teleosched
