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

// Command-line front end for the teleosched shared library; talks to the
// solver exclusively through the C API in teleosched.h.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench.hpp"
#include "capi_util.hpp"
#include "teleosched.h"

namespace cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot read " + path, 1);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw CommandError("cannot write to " + path, 2);
  }
}

// --epsilon {0|min-beta|<value>}
void parse_epsilon(const std::string& text, int& mode, ts_time& value) {
  if (text == "min-beta") {
    mode = TS_EPSILON_MIN_TELEOP;
    return;
  }
  try {
    const double units = std::stod(text);
    if (units < 0) throw CommandError("epsilon must be >= 0", 1);
    mode = TS_EPSILON_FIXED;
    value = static_cast<ts_time>(units * 100.0 + 0.5);
  } catch (const std::invalid_argument&) {
    throw CommandError("epsilon must be a number or 'min-beta'", 1);
  } catch (const std::out_of_range&) {
    throw CommandError("epsilon out of range", 1);
  }
}

InstancePtr load_instance_file(const std::string& path, int operators) {
  ts_instance* raw = nullptr;
  check(ts_instance_parse(read_file(path).c_str(), &raw));
  InstancePtr instance(raw);
  if (operators > 0) {
    check(ts_instance_set_operators(instance.get(), operators));
  }
  return instance;
}

std::string schedule_to_string(const ts_schedule* schedule) {
  std::string out;
  for (std::size_t pos = 0; pos < ts_schedule_length(schedule); ++pos) {
    int robot = 0;
    int task = 0;
    check(ts_schedule_entry(schedule, pos, &robot, &task));
    if (!out.empty()) out += ' ';
    out += std::to_string(robot + 1) + ':' + std::to_string(task + 1);
  }
  return out.empty() ? "(empty)" : out;
}

struct GenerateArgs {
  int robots = 2;
  int tasks = 5;
  int count = 1;
  std::uint64_t seed = 1;
  int operators = 0;
  std::string out_dir = ".";
};

void cmd_generate(const GenerateArgs& args) {
  for (int i = 0; i < args.count; ++i) {
    const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
    ts_instance* raw = nullptr;
    check(ts_instance_generate(args.robots, args.tasks, seed, &raw));
    InstancePtr instance(raw);
    if (args.operators > 0) {
      check(ts_instance_set_operators(instance.get(), args.operators));
    }
    char* text = nullptr;
    check(ts_instance_to_text(instance.get(), &text));
    const std::string path = args.out_dir + "/instance_" +
                             std::to_string(seed) + ".json";
    write_file(path, take_string(text));
  }
  std::cout << "wrote " << args.count << " instance file(s) under "
            << args.out_dir << "\n";
}

struct SolveArgs {
  std::string instance_path;
  std::string solver = "iterative-greedy";
  std::string epsilon = "0";
  double time_limit = 60.0;
  std::int64_t max_iterations = 0;
  int operators = 0;
  std::string timeline_path;
  std::string lp_path;
};

void cmd_solve(const SolveArgs& args) {
  const InstancePtr instance =
      load_instance_file(args.instance_path, args.operators);

  if (!args.lp_path.empty()) {
    char* lp = nullptr;
    check(ts_emit_lp(instance.get(), &lp));
    write_file(args.lp_path, take_string(lp));
    std::cout << "LP model written to " << args.lp_path << "\n";
  }

  ts_solve_options options;
  ts_solve_options_init(&options);
  options.time_limit_seconds = args.time_limit;
  options.max_iterations = args.max_iterations;
  parse_epsilon(args.epsilon, options.epsilon_mode, options.epsilon);

  const auto before = std::chrono::steady_clock::now();
  ts_solution* raw_solution = nullptr;
  check(ts_solve(instance.get(), args.solver.c_str(), &options,
                 &raw_solution));
  const SolutionPtr solution(raw_solution);
  const double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - before)
                             .count();

  std::cout << "solver: " << args.solver << "\n";
  std::cout << "makespan: " << format_time(ts_solution_makespan(solution.get()))
            << "\n";
  const int operators = ts_solution_operators(solution.get());
  for (int m = 0; m < operators; ++m) {
    ts_schedule* raw_schedule = nullptr;
    check(ts_solution_schedule(solution.get(), m, &raw_schedule));
    const SchedulePtr schedule(raw_schedule);
    if (operators == 1) {
      std::cout << "schedule: " << schedule_to_string(schedule.get()) << "\n";
    } else {
      std::cout << "schedule[operator " << m + 1
                << "]: " << schedule_to_string(schedule.get()) << "\n";
    }
  }
  if (args.solver == "exact") {
    std::cout << "proved optimal: "
              << (ts_solution_proved_optimal(solution.get()) == 1 ? "yes"
                                                                  : "no")
              << "\n";
  }
  std::cout << "steps: " << ts_solution_steps(solution.get()) << "\n";
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", wall_ms);
  std::cout << "wall_ms: " << wall << "\n";

  if (!args.timeline_path.empty()) {
    if (operators != 1) {
      throw CommandError("timeline export covers single-operator solves", 1);
    }
    ts_schedule* raw_schedule = nullptr;
    check(ts_solution_schedule(solution.get(), 0, &raw_schedule));
    const SchedulePtr schedule(raw_schedule);
    ts_timeline* raw_timeline = nullptr;
    check(ts_evaluate(instance.get(), schedule.get(), &raw_timeline));
    const TimelinePtr timeline(raw_timeline);
    char* csv = nullptr;
    check(ts_timeline_to_csv(timeline.get(), &csv));
    write_file(args.timeline_path, take_string(csv));
    std::cout << "timeline written to " << args.timeline_path << "\n";
  }
}

struct ReduceArgs {
  std::string formula_path;
  std::int64_t base = 100;
  std::int64_t saving = 1;
  std::string out_path;
  bool verify = false;
  double time_limit = 60.0;
};

void cmd_reduce(const ReduceArgs& args) {
  ts_formula* raw_formula = nullptr;
  check(ts_formula_parse(read_file(args.formula_path).c_str(), &raw_formula));
  const FormulaPtr formula(raw_formula);

  ts_instance* raw_instance = nullptr;
  ts_time target = 0;
  check(ts_reduce(formula.get(), args.base, args.saving, &raw_instance,
                  &target));
  const InstancePtr instance(raw_instance);

  std::cout << "variables: " << ts_formula_vars(formula.get())
            << " clauses: " << ts_formula_clauses(formula.get()) << "\n";
  std::cout << "robots: " << ts_instance_robots(instance.get())
            << " tasks: " << ts_instance_total_tasks(instance.get()) << "\n";
  std::cout << "target: " << format_time(target) << "\n";

  if (!args.out_path.empty()) {
    char* text = nullptr;
    check(ts_instance_to_text(instance.get(), &text));
    write_file(args.out_path, take_string(text));
    std::cout << "instance written to " << args.out_path << "\n";
  }

  if (args.verify) {
    ts_reduction_report report;
    check(ts_verify_reduction(formula.get(), args.base, args.saving,
                              args.time_limit, &report));
    std::cout << "satisfiable: " << (report.satisfiable ? "yes" : "no")
              << "\n";
    std::cout << "optimal makespan: " << format_time(report.optimal_makespan)
              << " (target " << format_time(report.target) << ", improved "
              << format_time(report.improved_target) << ")\n";
    std::cout << "equivalence: "
              << (report.equivalent ? "confirmed" : "FAILED") << "\n";
    if (!report.equivalent) {
      throw CommandError("reduction equivalence check failed", 2);
    }
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"teleoperation scheduling toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand(
      "generate", "write random instance files");
  generate->add_option("-K,--robots", gen.robots, "number of robots")
      ->check(CLI::PositiveNumber);
  generate->add_option("-N,--tasks", gen.tasks, "tasks per robot")
      ->check(CLI::PositiveNumber);
  generate->add_option("--count", gen.count, "number of instances")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "base seed");
  generate->add_option("--operators", gen.operators, "operator count");
  generate->add_option("-o,--out", gen.out_dir, "output directory");

  SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve one instance file");
  solve_cmd->add_option("instance", solve.instance_path, "instance file")
      ->required();
  solve_cmd->add_option("--solver", solve.solver, "solver name");
  solve_cmd->add_option("--epsilon", solve.epsilon,
                        "blocking threshold: 0, min-beta or a value");
  solve_cmd->add_option("--time-limit", solve.time_limit,
                        "exact-search time limit in seconds");
  solve_cmd->add_option("--max-iterations", solve.max_iterations,
                        "anytime cap on greedy improvement steps");
  solve_cmd->add_option("--operators", solve.operators,
                        "override the instance operator count");
  solve_cmd->add_option("--timeline", solve.timeline_path,
                        "write the evaluated timeline CSV here");
  solve_cmd->add_option("--emit-lp", solve.lp_path,
                        "write the LP model here");

  BenchOptions bench;
  std::string bench_epsilon = "0";
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run a seeded benchmark suite");
  bench_cmd->add_option("-K,--robots", bench.robots, "number of robots")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-N,--tasks", bench.tasks, "tasks per robot")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--count", bench.count, "number of instances")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed_base, "base seed");
  bench_cmd->add_flag("--with-exact", bench.with_exact,
                      "also compute the exact optimum per instance");
  bench_cmd->add_option("--exact-max-tasks", bench.exact_max_tasks,
                        "skip exact beyond this many total tasks");
  bench_cmd->add_option("--time-limit", bench.time_limit_seconds,
                        "exact-search time limit in seconds");
  bench_cmd->add_option("--solvers", bench.solvers,
                        "solver names to benchmark")
      ->delimiter(',');
  bench_cmd->add_option("--epsilon", bench_epsilon,
                        "blocking threshold: 0, min-beta or a value");
  bench_cmd->add_option("--format", bench.format, "csv or json");
  bench_cmd->add_option("-o,--out", bench.out_path,
                        "write per-instance rows here (default stdout)");

  ReduceArgs reduce;
  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce", "build a scheduling instance from a 2p1n formula");
  reduce_cmd->add_option("formula", reduce.formula_path, "formula file")
      ->required();
  reduce_cmd->add_option("--z", reduce.base, "base task length (whole units)")
      ->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--dz", reduce.saving,
                         "teleoperation saving (whole units)")
      ->check(CLI::PositiveNumber);
  reduce_cmd->add_option("-o,--out", reduce.out_path,
                         "write the reduced instance here");
  reduce_cmd->add_flag("--verify", reduce.verify,
                       "check satisfiability against the exact optimum");
  reduce_cmd->add_option("--time-limit", reduce.time_limit,
                         "exact-search time limit for --verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (generate->parsed()) cmd_generate(gen);
    if (solve_cmd->parsed()) cmd_solve(solve);
    if (bench_cmd->parsed()) {
      parse_epsilon(bench_epsilon, bench.epsilon_mode, bench.epsilon);
      run_bench(bench);
    }
    if (reduce_cmd->parsed()) cmd_reduce(reduce);
  } catch (const CommandError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.exit_code;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) { return cli::dispatch(argc, argv); }
