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

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "capi_util.hpp"
#include "json.hpp"

namespace cli {
namespace {

struct BenchRow {
  std::uint64_t seed = 0;
  std::string solver;
  ts_time makespan = 0;
  std::optional<ts_time> optimal;  // proved optimum of this instance
  double ratio = 0.0;
  double wall_ms = 0.0;
  std::uint64_t steps = 0;
};

struct InstanceOutcome {
  std::uint64_t seed = 0;
  ts_time all_autonomous = 0;
  std::optional<ts_time> optimal;
  std::vector<BenchRow> rows;
};

std::vector<std::string> solver_list(const BenchOptions& options) {
  std::vector<std::string> solvers = options.solvers;
  if (solvers.empty()) {
    if (options.with_exact) {
      solvers = {"iterative-greedy"};
    } else {
      solvers = {"naive-greedy",     "comparison-greedy",
                 "greedy-insertion", "naive+iterative",
                 "comparison+iterative", "iterative-greedy"};
    }
  }
  // iterative-greedy anchors the relative ratios, so it always runs
  if (std::find(solvers.begin(), solvers.end(), "iterative-greedy") ==
      solvers.end()) {
    solvers.push_back("iterative-greedy");
  }
  return solvers;
}

BenchRow run_one(const ts_instance* instance, std::uint64_t seed,
                 const std::string& solver, const ts_solve_options& opts) {
  BenchRow row;
  row.seed = seed;
  row.solver = solver;

  const auto before = std::chrono::steady_clock::now();
  ts_solution* solution = nullptr;
  check(ts_solve(instance, solver.c_str(), &opts, &solution));
  const SolutionPtr owner(solution);
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - before)
                    .count();
  row.makespan = ts_solution_makespan(solution);
  row.steps = ts_solution_steps(solution);
  if (solver == "exact" && ts_solution_proved_optimal(solution) == 1) {
    row.optimal = row.makespan;
  }
  return row;
}

std::string csv_header() {
  return "seed,solver,K,N,makespan,optimal_makespan,ratio,wall_ms,steps";
}

std::string csv_row(const BenchRow& row, const BenchOptions& options) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", row.ratio);
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", row.wall_ms);
  return std::to_string(row.seed) + ',' + row.solver + ',' +
         std::to_string(options.robots) + ',' + std::to_string(options.tasks) +
         ',' + format_time(row.makespan) + ',' +
         (row.optimal ? format_time(*row.optimal) : std::string()) + ',' +
         ratio + ',' + wall + ',' + std::to_string(row.steps);
}

struct SolverAggregate {
  std::string solver;
  double ratio_sum = 0.0;
  double ratio_max = 0.0;
  double wall_sum = 0.0;
  int rows = 0;
  int within_5pct = 0;
  int proved_rows = 0;
};

std::vector<SolverAggregate> aggregate(
    const std::vector<InstanceOutcome>& outcomes,
    const std::vector<std::string>& order) {
  std::vector<SolverAggregate> stats;
  for (const std::string& solver : order) {
    SolverAggregate agg;
    agg.solver = solver;
    for (const InstanceOutcome& outcome : outcomes) {
      for (const BenchRow& row : outcome.rows) {
        if (row.solver != solver) continue;
        agg.ratio_sum += row.ratio;
        agg.ratio_max = std::max(agg.ratio_max, row.ratio);
        agg.wall_sum += row.wall_ms;
        agg.rows += 1;
        if (outcome.optimal) {
          agg.proved_rows += 1;
          const double limit = 1.05;
          if (static_cast<double>(row.makespan) <=
              limit * static_cast<double>(*outcome.optimal)) {
            agg.within_5pct += 1;
          }
        }
      }
    }
    stats.push_back(agg);
  }
  return stats;
}

std::string summary_text(const BenchOptions& options,
                         const std::vector<InstanceOutcome>& outcomes,
                         const std::vector<SolverAggregate>& stats) {
  std::string out = "benchmark: K=" + std::to_string(options.robots) +
                    " N=" + std::to_string(options.tasks) +
                    " count=" + std::to_string(options.count) +
                    " seed-base=" + std::to_string(options.seed_base) + "\n";

  int proved = 0;
  double excess_sum = 0.0;
  for (const InstanceOutcome& outcome : outcomes) {
    if (!outcome.optimal) continue;
    ++proved;
    excess_sum += static_cast<double>(outcome.all_autonomous) /
                      static_cast<double>(*outcome.optimal) -
                  1.0;
  }
  if (options.with_exact) {
    out += "exact: proved " + std::to_string(proved) + '/' +
           std::to_string(options.count) + " instances\n";
    if (proved > 0) {
      char excess[64];
      std::snprintf(excess, sizeof excess, "%.2f", 100.0 * excess_sum / proved);
      out += "no-teleoperation excess: mean " + std::string(excess) +
             "% over proved instances\n";
    }
  } else {
    out += "ratios are relative to iterative-greedy\n";
  }

  char line[160];
  std::snprintf(line, sizeof line, "%-22s %10s %10s %11s %13s\n", "solver",
                "mean_ratio", "max_ratio", "within_5pct", "mean_wall_ms");
  out += line;
  for (const SolverAggregate& agg : stats) {
    const double mean_ratio = agg.rows > 0 ? agg.ratio_sum / agg.rows : 0.0;
    const double mean_wall = agg.rows > 0 ? agg.wall_sum / agg.rows : 0.0;
    std::string within = "-";
    if (options.with_exact) {
      within = std::to_string(agg.within_5pct) + '/' +
               std::to_string(agg.proved_rows);
    }
    std::snprintf(line, sizeof line, "%-22s %10.6f %10.6f %11s %13.3f\n",
                  agg.solver.c_str(), mean_ratio, agg.ratio_max,
                  within.c_str(), mean_wall);
    out += line;
  }
  return out;
}

nlohmann::json summary_json(const std::vector<InstanceOutcome>& outcomes,
                            const std::vector<SolverAggregate>& stats) {
  nlohmann::json solvers = nlohmann::json::array();
  for (const SolverAggregate& agg : stats) {
    solvers.push_back({{"solver", agg.solver},
                       {"mean_ratio", agg.rows ? agg.ratio_sum / agg.rows : 0},
                       {"max_ratio", agg.ratio_max},
                       {"within_5pct", agg.within_5pct},
                       {"proved_rows", agg.proved_rows},
                       {"mean_wall_ms", agg.rows ? agg.wall_sum / agg.rows : 0}});
  }
  int proved = 0;
  double excess_sum = 0.0;
  for (const InstanceOutcome& outcome : outcomes) {
    if (!outcome.optimal) continue;
    ++proved;
    excess_sum += static_cast<double>(outcome.all_autonomous) /
                      static_cast<double>(*outcome.optimal) -
                  1.0;
  }
  nlohmann::json out{{"proved", proved}, {"solvers", solvers}};
  if (proved > 0) out["no_teleop_excess_mean"] = excess_sum / proved;
  return out;
}

}  // namespace

void run_bench(const BenchOptions& options) {
  if (options.robots < 1 || options.tasks < 1 || options.count < 1) {
    throw CommandError("bench needs K >= 1, N >= 1 and count >= 1", 1);
  }
  if (options.format != "csv" && options.format != "json") {
    throw CommandError("format must be csv or json", 1);
  }

  const std::vector<std::string> solvers = solver_list(options);

  ts_solve_options solve_options;
  ts_solve_options_init(&solve_options);
  solve_options.time_limit_seconds = options.time_limit_seconds;
  solve_options.epsilon_mode = options.epsilon_mode;
  solve_options.epsilon = options.epsilon;

  const bool run_exact =
      options.with_exact &&
      static_cast<std::int64_t>(options.robots) * options.tasks <=
          options.exact_max_tasks;
  if (options.with_exact && !run_exact) {
    std::cerr << "warning: exact skipped, instance size "
              << options.robots * options.tasks << " exceeds --exact-max-tasks "
              << options.exact_max_tasks << "\n";
  }

  std::vector<InstanceOutcome> outcomes;
  outcomes.reserve(options.count);
  for (int i = 0; i < options.count; ++i) {
    const std::uint64_t seed = options.seed_base + static_cast<std::uint64_t>(i);
    ts_instance* raw = nullptr;
    check(ts_instance_generate(options.robots, options.tasks, seed, &raw));
    const InstancePtr instance(raw);

    InstanceOutcome outcome;
    outcome.seed = seed;
    outcome.all_autonomous = ts_instance_all_autonomous_makespan(raw);

    if (run_exact) {
      BenchRow row = run_one(raw, seed, "exact", solve_options);
      outcome.optimal = row.optimal;
      outcome.rows.push_back(std::move(row));
    }
    for (const std::string& solver : solvers) {
      if (run_exact && solver == "exact") continue;  // already ran
      outcome.rows.push_back(run_one(raw, seed, solver, solve_options));
    }

    // Ratio denominator: the proved
    // optimum when available, the iterative-greedy makespan otherwise.
    ts_time denominator = 0;
    if (outcome.optimal) {
      denominator = *outcome.optimal;
    } else {
      for (const BenchRow& row : outcome.rows) {
        if (row.solver == "iterative-greedy") denominator = row.makespan;
      }
    }
    for (BenchRow& row : outcome.rows) {
      row.ratio = static_cast<double>(row.makespan) /
                  static_cast<double>(denominator);
      if (outcome.optimal) row.optimal = outcome.optimal;
    }
    outcomes.push_back(std::move(outcome));
  }

  std::vector<std::string> row_order = solvers;
  if (run_exact) row_order.insert(row_order.begin(), "exact");
  const std::vector<SolverAggregate> stats = aggregate(outcomes, row_order);

  std::ofstream file;
  const bool to_file = !options.out_path.empty();
  if (to_file) {
    file.open(options.out_path);
    if (!file) {
      throw CommandError("cannot write to " + options.out_path, 2);
    }
  }
  std::ostream& rows_out = to_file ? static_cast<std::ostream&>(file)
                                   : std::cout;

  if (options.format == "csv") {
    rows_out << csv_header() << '\n';
    for (const InstanceOutcome& outcome : outcomes) {
      for (const BenchRow& row : outcome.rows) {
        rows_out << csv_row(row, options) << '\n';
      }
    }
    (to_file ? std::cout : std::cerr)
        << summary_text(options, outcomes, stats);
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (const InstanceOutcome& outcome : outcomes) {
      for (const BenchRow& row : outcome.rows) {
        nlohmann::json entry{{"seed", row.seed},
                             {"solver", row.solver},
                             {"K", options.robots},
                             {"N", options.tasks},
                             {"makespan", format_time(row.makespan)},
                             {"ratio", row.ratio},
                             {"wall_ms", row.wall_ms},
                             {"steps", row.steps}};
        if (row.optimal) entry["optimal_makespan"] = format_time(*row.optimal);
        rows.push_back(std::move(entry));
      }
    }
    const nlohmann::json doc{{"rows", std::move(rows)},
                             {"summary", summary_json(outcomes, stats)}};
    rows_out << doc.dump(2) << '\n';
  }
}

}  // namespace cli
