/* Copyright 2026 The teleosched Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the teleosched shared library.
 *
 * All objects are opaque handles freed with their matching *_free
 * function. Functions returning ts_status report TS_OK on success; on
 * failure the handle outputs are untouched and ts_last_error() returns a
 * thread-local description of the problem. Robot, task and operator
 * indices are zero-based unless stated otherwise. Times are fixed-point
 * with two fractional digits, passed as integer hundredths.
 */

#ifndef TELEOSCHED_H
#define TELEOSCHED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int64_t ts_time; /* hundredths of a time unit */

typedef enum ts_status {
  TS_OK = 0,
  TS_ERR_INVALID_ARGUMENT = 1,
  TS_ERR_PARSE = 2,
  TS_ERR_VALIDATION = 3,
  TS_ERR_INTERNAL = 4
} ts_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* ts_last_error(void);
const char* ts_version(void);

/* Frees strings returned through char** outputs. */
void ts_string_free(char* text);

typedef struct ts_instance ts_instance;
typedef struct ts_schedule ts_schedule;
typedef struct ts_timeline ts_timeline;
typedef struct ts_blocking ts_blocking;
typedef struct ts_solution ts_solution;
typedef struct ts_formula ts_formula;

/* ---- instances ------------------------------------------------------ */

ts_status ts_instance_generate(int robots, int tasks_per_robot, uint64_t seed,
                               ts_instance** out);
ts_status ts_instance_parse(const char* text, ts_instance** out);
ts_status ts_instance_to_text(const ts_instance* instance, char** out_text);
ts_status ts_instance_set_operators(ts_instance* instance, int operators);
int ts_instance_robots(const ts_instance* instance);
int ts_instance_operators(const ts_instance* instance);
int ts_instance_tasks(const ts_instance* instance, int robot);
int64_t ts_instance_total_tasks(const ts_instance* instance);
ts_time ts_instance_autonomous(const ts_instance* instance, int robot,
                               int task);
ts_time ts_instance_teleoperated(const ts_instance* instance, int robot,
                                 int task);
ts_time ts_instance_all_autonomous_makespan(const ts_instance* instance);
void ts_instance_free(ts_instance* instance);

/* ---- schedules ------------------------------------------------------ */

ts_status ts_schedule_create(ts_schedule** out);
ts_status ts_schedule_append(ts_schedule* schedule, int robot, int task);
size_t ts_schedule_length(const ts_schedule* schedule);
ts_status ts_schedule_entry(const ts_schedule* schedule, size_t position,
                            int* robot, int* task);
void ts_schedule_free(ts_schedule* schedule);

/* ---- evaluation ----------------------------------------------------- */

ts_status ts_evaluate(const ts_instance* instance,
                      const ts_schedule* schedule, ts_timeline** out);
ts_time ts_timeline_makespan(const ts_timeline* timeline);
/* operator_index receives 0 for autonomous tasks, else the 1-based
 * serving operator. */
ts_status ts_timeline_task_window(const ts_timeline* timeline, int robot,
                                  int task, ts_time* start, ts_time* finish,
                                  int* operator_index);
ts_status ts_timeline_to_csv(const ts_timeline* timeline, char** out_text);
void ts_timeline_free(ts_timeline* timeline);

/* Blocked entries with idle gap > epsilon, sorted by start descending. */
ts_status ts_find_blocking(const ts_instance* instance,
                           const ts_schedule* schedule, ts_time epsilon,
                           ts_blocking** out);
size_t ts_blocking_count(const ts_blocking* blocking);
ts_status ts_blocking_entry(const ts_blocking* blocking, size_t index,
                            int* robot, int* task, ts_time* gap,
                            ts_time* start);
void ts_blocking_free(ts_blocking* blocking);

/* ---- solving -------------------------------------------------------- */

enum {
  TS_EPSILON_ZERO = 0,
  TS_EPSILON_MIN_TELEOP = 1,
  TS_EPSILON_FIXED = 2
};

typedef struct ts_solve_options {
  double time_limit_seconds; /* exact search; must be positive */
  int64_t max_iterations;    /* greedy anytime cap; 0 = unlimited */
  int epsilon_mode;          /* TS_EPSILON_* */
  ts_time epsilon;           /* used with TS_EPSILON_FIXED */
} ts_solve_options;

void ts_solve_options_init(ts_solve_options* options);

/* `solver` is one of: iterative-greedy, greedy-insertion, block-removal,
 * naive-greedy, comparison-greedy, naive+iterative, comparison+iterative,
 * exact. Only `exact` accepts instances with operators >= 2. Passing NULL
 * options uses the defaults from ts_solve_options_init. */
ts_status ts_solve(const ts_instance* instance, const char* solver,
                   const ts_solve_options* options, ts_solution** out);
ts_time ts_solution_makespan(const ts_solution* solution);
int ts_solution_proved_optimal(const ts_solution* solution);
uint64_t ts_solution_steps(const ts_solution* solution);
int ts_solution_operators(const ts_solution* solution);
/* Copies the serving sequence of one operator (zero-based). */
ts_status ts_solution_schedule(const ts_solution* solution,
                               int operator_index, ts_schedule** out);
void ts_solution_free(ts_solution* solution);

/* ---- LP export ------------------------------------------------------ */

ts_status ts_emit_lp(const ts_instance* instance, char** out_text);

/* ---- SAT reduction --------------------------------------------------- */

ts_status ts_formula_parse(const char* text, ts_formula** out);
int ts_formula_vars(const ts_formula* formula);
int ts_formula_clauses(const ts_formula* formula);
void ts_formula_free(ts_formula* formula);

/* Builds the scheduling instance of a 2p1n formula. `base` and `saving`
 * are whole time units with 0 < saving <= base / 10. `target` receives
 * the all-autonomous mission time 2 * base * num_vars. */
ts_status ts_reduce(const ts_formula* formula, int64_t base, int64_t saving,
                    ts_instance** out, ts_time* target);
ts_status ts_sat_brute_force(const ts_formula* formula, int* satisfiable);

typedef struct ts_reduction_report {
  int satisfiable;
  int proved;
  int equivalent;
  ts_time optimal_makespan;
  ts_time target;
  ts_time improved_target;
} ts_reduction_report;

ts_status ts_verify_reduction(const ts_formula* formula, int64_t base,
                              int64_t saving, double time_limit_seconds,
                              ts_reduction_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TELEOSCHED_H */
