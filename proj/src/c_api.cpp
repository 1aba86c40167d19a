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

#include "teleosched.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "teleosched/errors.hpp"
#include "teleosched/evaluate.hpp"
#include "teleosched/generate.hpp"
#include "teleosched/greedy.hpp"
#include "teleosched/io.hpp"
#include "teleosched/lp.hpp"
#include "teleosched/reduction.hpp"
#include "teleosched/solvers.hpp"
#include "teleosched/types.hpp"

using namespace teleosched;

struct ts_instance {
  Instance value;
};
struct ts_schedule {
  Schedule value;
};
struct ts_timeline {
  Timeline value;
};
struct ts_blocking {
  BlockingReport value;
};
struct ts_solution {
  SolveResult value;
};
struct ts_formula {
  SatFormula value;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const char* what) { g_last_error = what; }

// Maps C++ exceptions from the core onto status codes.
template <class Fn>
ts_status guarded(Fn&& fn) {
  try {
    fn();
    return TS_OK;
  } catch (const ParseError& err) {
    set_error(err.what());
    return TS_ERR_PARSE;
  } catch (const ValidationError& err) {
    set_error(err.what());
    return TS_ERR_VALIDATION;
  } catch (const InvalidArgument& err) {
    set_error(err.what());
    return TS_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& err) {
    set_error(err.what());
    return TS_ERR_INTERNAL;
  }
}

ts_status require(bool condition, const char* message) {
  if (condition) return TS_OK;
  set_error(message);
  return TS_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

bool task_in_range(const Instance& instance, int robot, int task) {
  return robot >= 0 && robot < instance.robots() && task >= 0 &&
         task < instance.tasks(robot);
}

GreedyConfig greedy_config_from(const ts_solve_options& options) {
  GreedyConfig config;
  switch (options.epsilon_mode) {
    case TS_EPSILON_ZERO:
      config.epsilon_policy = EpsilonPolicy::kZero;
      break;
    case TS_EPSILON_MIN_TELEOP:
      config.epsilon_policy = EpsilonPolicy::kMinTeleop;
      break;
    case TS_EPSILON_FIXED:
      config.epsilon_policy = EpsilonPolicy::kFixed;
      config.epsilon = Time::from_centi(options.epsilon);
      break;
    default:
      throw InvalidArgument("unknown epsilon mode");
  }
  config.max_iterations = options.max_iterations;
  return config;
}

}  // namespace

extern "C" {

const char* ts_last_error(void) { return g_last_error.c_str(); }

const char* ts_version(void) { return "0.1.0"; }

void ts_string_free(char* text) { delete[] text; }

/* ---- instances ------------------------------------------------------ */

ts_status ts_instance_generate(int robots, int tasks_per_robot, uint64_t seed,
                               ts_instance** out) {
  if (ts_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    *out = new ts_instance{generate_instance(robots, tasks_per_robot, seed)};
  });
}

ts_status ts_instance_parse(const char* text, ts_instance** out) {
  if (ts_status s = require(text != nullptr && out != nullptr,
                            "text or out is NULL")) {
    return s;
  }
  return guarded([&] { *out = new ts_instance{load_instance(text)}; });
}

ts_status ts_instance_to_text(const ts_instance* instance, char** out_text) {
  if (ts_status s = require(instance != nullptr && out_text != nullptr,
                            "instance or out_text is NULL")) {
    return s;
  }
  return guarded(
      [&] { *out_text = copy_string(save_instance(instance->value)); });
}

ts_status ts_instance_set_operators(ts_instance* instance, int operators) {
  if (ts_status s = require(instance != nullptr, "instance is NULL")) {
    return s;
  }
  if (ts_status s = require(operators >= 1, "operators must be >= 1")) {
    return s;
  }
  instance->value.operators = operators;
  return TS_OK;
}

int ts_instance_robots(const ts_instance* instance) {
  return instance == nullptr ? 0 : instance->value.robots();
}

int ts_instance_operators(const ts_instance* instance) {
  return instance == nullptr ? 0 : instance->value.operators;
}

int ts_instance_tasks(const ts_instance* instance, int robot) {
  if (instance == nullptr || robot < 0 || robot >= instance->value.robots()) {
    return 0;
  }
  return instance->value.tasks(robot);
}

int64_t ts_instance_total_tasks(const ts_instance* instance) {
  return instance == nullptr
             ? 0
             : static_cast<int64_t>(instance->value.total_tasks());
}

ts_time ts_instance_autonomous(const ts_instance* instance, int robot,
                               int task) {
  if (instance == nullptr || !task_in_range(instance->value, robot, task)) {
    return 0;
  }
  return instance->value.task({robot, task}).autonomous.centi;
}

ts_time ts_instance_teleoperated(const ts_instance* instance, int robot,
                                 int task) {
  if (instance == nullptr || !task_in_range(instance->value, robot, task)) {
    return 0;
  }
  return instance->value.task({robot, task}).teleoperated.centi;
}

ts_time ts_instance_all_autonomous_makespan(const ts_instance* instance) {
  if (instance == nullptr) return 0;
  return all_autonomous_makespan(instance->value).centi;
}

void ts_instance_free(ts_instance* instance) { delete instance; }

/* ---- schedules ------------------------------------------------------ */

ts_status ts_schedule_create(ts_schedule** out) {
  if (ts_status s = require(out != nullptr, "out is NULL")) return s;
  *out = new ts_schedule{};
  return TS_OK;
}

ts_status ts_schedule_append(ts_schedule* schedule, int robot, int task) {
  if (ts_status s = require(schedule != nullptr, "schedule is NULL")) {
    return s;
  }
  if (ts_status s = require(robot >= 0 && task >= 0,
                            "robot and task must be >= 0")) {
    return s;
  }
  schedule->value.entries.push_back({robot, task});
  return TS_OK;
}

size_t ts_schedule_length(const ts_schedule* schedule) {
  return schedule == nullptr ? 0 : schedule->value.entries.size();
}

ts_status ts_schedule_entry(const ts_schedule* schedule, size_t position,
                            int* robot, int* task) {
  if (ts_status s = require(
          schedule != nullptr && position < schedule->value.entries.size(),
          "schedule is NULL or position out of range")) {
    return s;
  }
  const TaskRef ref = schedule->value.entries[position];
  if (robot != nullptr) *robot = ref.robot;
  if (task != nullptr) *task = ref.task;
  return TS_OK;
}

void ts_schedule_free(ts_schedule* schedule) { delete schedule; }

/* ---- evaluation ----------------------------------------------------- */

ts_status ts_evaluate(const ts_instance* instance, const ts_schedule* schedule,
                      ts_timeline** out) {
  if (ts_status s =
          require(instance != nullptr && schedule != nullptr && out != nullptr,
                  "instance, schedule or out is NULL")) {
    return s;
  }
  return guarded([&] {
    *out = new ts_timeline{evaluate(instance->value, schedule->value)};
  });
}

ts_time ts_timeline_makespan(const ts_timeline* timeline) {
  return timeline == nullptr ? 0 : timeline->value.makespan.centi;
}

ts_status ts_timeline_task_window(const ts_timeline* timeline, int robot,
                                  int task, ts_time* start, ts_time* finish,
                                  int* operator_index) {
  if (ts_status s = require(timeline != nullptr, "timeline is NULL")) return s;
  const Timeline& tl = timeline->value;
  if (ts_status s = require(robot >= 0 &&
                                robot < static_cast<int>(tl.start.size()) &&
                                task >= 0 &&
                                task < static_cast<int>(tl.start[robot].size()),
                            "task reference out of range")) {
    return s;
  }
  if (start != nullptr) *start = tl.start[robot][task].centi;
  if (finish != nullptr) *finish = tl.finish[robot][task].centi;
  if (operator_index != nullptr) *operator_index = tl.served_by[robot][task];
  return TS_OK;
}

ts_status ts_timeline_to_csv(const ts_timeline* timeline, char** out_text) {
  if (ts_status s = require(timeline != nullptr && out_text != nullptr,
                            "timeline or out_text is NULL")) {
    return s;
  }
  return guarded(
      [&] { *out_text = copy_string(timeline_to_csv(timeline->value)); });
}

void ts_timeline_free(ts_timeline* timeline) { delete timeline; }

ts_status ts_find_blocking(const ts_instance* instance,
                           const ts_schedule* schedule, ts_time epsilon,
                           ts_blocking** out) {
  if (ts_status s =
          require(instance != nullptr && schedule != nullptr && out != nullptr,
                  "instance, schedule or out is NULL")) {
    return s;
  }
  return guarded([&] {
    *out = new ts_blocking{find_blocking(instance->value, schedule->value,
                                         Time::from_centi(epsilon))};
  });
}

size_t ts_blocking_count(const ts_blocking* blocking) {
  return blocking == nullptr ? 0 : blocking->value.blocks.size();
}

ts_status ts_blocking_entry(const ts_blocking* blocking, size_t index,
                            int* robot, int* task, ts_time* gap,
                            ts_time* start) {
  if (ts_status s = require(
          blocking != nullptr && index < blocking->value.blocks.size(),
          "blocking is NULL or index out of range")) {
    return s;
  }
  const Block& block = blocking->value.blocks[index];
  if (robot != nullptr) *robot = block.task.robot;
  if (task != nullptr) *task = block.task.task;
  if (gap != nullptr) *gap = block.gap.centi;
  if (start != nullptr) *start = block.start.centi;
  return TS_OK;
}

void ts_blocking_free(ts_blocking* blocking) { delete blocking; }

/* ---- solving -------------------------------------------------------- */

void ts_solve_options_init(ts_solve_options* options) {
  if (options == nullptr) return;
  options->time_limit_seconds = 60.0;
  options->max_iterations = 0;
  options->epsilon_mode = TS_EPSILON_ZERO;
  options->epsilon = 0;
}

ts_status ts_solve(const ts_instance* instance, const char* solver,
                   const ts_solve_options* options, ts_solution** out) {
  if (ts_status s =
          require(instance != nullptr && solver != nullptr && out != nullptr,
                  "instance, solver or out is NULL")) {
    return s;
  }
  return guarded([&] {
    ts_solve_options defaults;
    ts_solve_options_init(&defaults);
    const ts_solve_options& opts = options != nullptr ? *options : defaults;
    SolveOptions solve_options;
    solve_options.time_limit_seconds = opts.time_limit_seconds;
    solve_options.greedy = greedy_config_from(opts);
    *out = new ts_solution{
        run_solver(instance->value, solver, solve_options)};
  });
}

ts_time ts_solution_makespan(const ts_solution* solution) {
  return solution == nullptr ? 0 : solution->value.makespan.centi;
}

int ts_solution_proved_optimal(const ts_solution* solution) {
  return solution != nullptr && solution->value.proved_optimal ? 1 : 0;
}

uint64_t ts_solution_steps(const ts_solution* solution) {
  return solution == nullptr ? 0 : solution->value.steps;
}

int ts_solution_operators(const ts_solution* solution) {
  return solution == nullptr
             ? 0
             : static_cast<int>(solution->value.schedules.size());
}

ts_status ts_solution_schedule(const ts_solution* solution, int operator_index,
                               ts_schedule** out) {
  if (ts_status s = require(solution != nullptr && out != nullptr,
                            "solution or out is NULL")) {
    return s;
  }
  if (ts_status s = require(
          operator_index >= 0 &&
              operator_index <
                  static_cast<int>(solution->value.schedules.size()),
          "operator index out of range")) {
    return s;
  }
  *out = new ts_schedule{solution->value.schedules[operator_index]};
  return TS_OK;
}

void ts_solution_free(ts_solution* solution) { delete solution; }

/* ---- LP export ------------------------------------------------------ */

ts_status ts_emit_lp(const ts_instance* instance, char** out_text) {
  if (ts_status s = require(instance != nullptr && out_text != nullptr,
                            "instance or out_text is NULL")) {
    return s;
  }
  return guarded([&] { *out_text = copy_string(emit_lp(instance->value)); });
}

/* ---- SAT reduction --------------------------------------------------- */

ts_status ts_formula_parse(const char* text, ts_formula** out) {
  if (ts_status s = require(text != nullptr && out != nullptr,
                            "text or out is NULL")) {
    return s;
  }
  return guarded([&] { *out = new ts_formula{parse_formula(text)}; });
}

int ts_formula_vars(const ts_formula* formula) {
  return formula == nullptr ? 0 : formula->value.num_vars;
}

int ts_formula_clauses(const ts_formula* formula) {
  return formula == nullptr ? 0
                            : static_cast<int>(formula->value.clauses.size());
}

void ts_formula_free(ts_formula* formula) { delete formula; }

ts_status ts_reduce(const ts_formula* formula, int64_t base, int64_t saving,
                    ts_instance** out, ts_time* target) {
  if (ts_status s = require(formula != nullptr && out != nullptr,
                            "formula or out is NULL")) {
    return s;
  }
  return guarded([&] {
    ReducedInstance reduced =
        reduce_formula(formula->value, ReductionParams{base, saving});
    if (target != nullptr) *target = reduced.target.centi;
    *out = new ts_instance{std::move(reduced.instance)};
  });
}

ts_status ts_sat_brute_force(const ts_formula* formula, int* satisfiable) {
  if (ts_status s = require(formula != nullptr && satisfiable != nullptr,
                            "formula or satisfiable is NULL")) {
    return s;
  }
  return guarded(
      [&] { *satisfiable = sat_brute_force(formula->value) ? 1 : 0; });
}

ts_status ts_verify_reduction(const ts_formula* formula, int64_t base,
                              int64_t saving, double time_limit_seconds,
                              ts_reduction_report* out) {
  if (ts_status s = require(formula != nullptr && out != nullptr,
                            "formula or out is NULL")) {
    return s;
  }
  return guarded([&] {
    const ReductionCheck check = verify_reduction(
        formula->value, ReductionParams{base, saving}, time_limit_seconds);
    out->satisfiable = check.satisfiable ? 1 : 0;
    out->proved = check.proved ? 1 : 0;
    out->equivalent = check.equivalent ? 1 : 0;
    out->optimal_makespan = check.optimal_makespan.centi;
    out->target = check.target.centi;
    out->improved_target = check.improved_target.centi;
  });
}

} /* extern "C" */
